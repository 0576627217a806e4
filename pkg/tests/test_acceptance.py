"""Acceptance suite: one test and one printed pass/fail line per criterion.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
"""

import math
import time

import numpy as np

from wavemark.attacks import zero_region
from wavemark.codec import (
    EmbedConfig,
    authenticate_pixels,
    embed_in_coefficient,
    embed_pixels,
    extract_from_coefficient,
)
from wavemark.metrics import image_fidelity, psnr, psnr_from_mse
from wavemark.pgm import Image, read_pgm, write_pgm
from wavemark.synth import make_test_image
from wavemark.transform import DAUB4, fdt_block, idt_block

from quality_reference import MSE_PSNR_FULL_BPB, MSE_PSNR_HALF_BPB

_RNG = np.random.default_rng(0xACCE97)


def _report(number, label, ok, detail=""):
    state = "PASS" if ok else "FAIL"
    print(f"criterion {number:02d} {label}: {state}" + (f" ({detail})" if detail else ""))
    assert ok, f"criterion {number} {label} {detail}"


def _random_blocks(count):
    return _RNG.uniform(-500.0, 755.0, (count, 4, 4))


def test_criterion_01_perfect_reconstruction():
    blocks = _random_blocks(10_000)
    start = time.perf_counter()
    worst = 0.0
    for block in blocks:
        worst = max(worst, np.abs(idt_block(fdt_block(block)) - block).max())
    elapsed = time.perf_counter() - start
    _report(1, "perfect reconstruction", worst < 1e-9 and elapsed < 1.0,
            f"max err {worst:.3e}, {elapsed:.2f}s")


def test_criterion_02_energy_conservation():
    blocks = _random_blocks(10_000)
    worst = 0.0
    for block in blocks:
        coeffs = fdt_block(block)
        energy = (block * block).sum()
        worst = max(worst, abs((coeffs * coeffs).sum() - energy) / energy)
    _report(2, "energy conservation", worst < 1e-6, f"max rel err {worst:.3e}")


def test_criterion_03_filter_identities():
    h, g = DAUB4
    ok = (abs(h.sum() - math.sqrt(2.0)) < 1e-12
          and abs(g.sum()) < 1e-12
          and abs((h * h).sum() - 1.0) < 1e-12
          and abs((h * g).sum()) < 1e-12)
    _report(3, "filter identities", ok)


def test_criterion_04_psnr_formula_vs_published_tables():
    worst = max(abs(psnr_from_mse(m) - expected)
                for _, m, expected in MSE_PSNR_HALF_BPB + MSE_PSNR_FULL_BPB)
    _report(4, "psnr matches 20 published mse/psnr pairs", worst < 1e-3,
            f"max dev {worst:.2e} dB")


def test_criterion_05_quality_band_half_bpb(corpus_runs):
    worst_psnr, worst_if = math.inf, 1.0
    for _, cover, stego, _ in corpus_runs["set1"]:
        worst_psnr = min(worst_psnr, psnr(cover, stego))
        worst_if = min(worst_if, image_fidelity(cover, stego))
    _report(5, "0.5 bpB quality band", worst_psnr >= 45.0 and worst_if >= 0.9999,
            f"worst psnr {worst_psnr:.3f} dB, worst IF {worst_if:.6f}")


def test_criterion_06_quality_band_full_bpb(corpus_runs):
    worst = min(psnr(cover, stego)
                for _, cover, stego, _ in corpus_runs["set1set2"])
    _report(6, "1.0 bpB quality band", worst >= 42.0,
            f"worst psnr {worst:.3f} dB")


def test_criterion_07_payload_accounting(corpus_images):
    cover = corpus_images[0][1]
    _, n1 = embed_pixels(cover, EmbedConfig(mode="set1"))
    _, n2 = embed_pixels(cover, EmbedConfig(mode="set1set2"))
    ok = n1 == 16_384 and n2 == 32_768
    _report(7, "payload accounting", ok, f"set1 {n1}, dual {n2} bytes")


def test_criterion_08_untampered_authentication(corpus_runs):
    worst = 1.0
    all_authentic = True
    for mode in ("set1", "set1set2"):
        for _, _, _, report in corpus_runs[mode]:
            worst = min(worst, report.match_fraction)
            all_authentic &= report.authentic
    _report(8, "untampered authentication", worst >= 0.95 and all_authentic,
            f"worst match fraction {worst:.4f}")


def test_criterion_09_tamper_localization():
    cfg = EmbedConfig(mode="set1")
    stego, _ = embed_pixels(make_test_image(77, 128), cfg)
    before = authenticate_pixels(stego, cfg)
    after = authenticate_pixels(zero_region(stego, 64, 64, 32, 32), cfg)

    covered_flagged = (~after.matched[16:24, 16:24]).mean()
    outside = np.ones(after.grid_shape, bool)
    outside[15:25, 15:25] = False  # region plus a 1-tile halo
    no_new_outside = np.array_equal(after.matched[outside],
                                    before.matched[outside])
    ok = (covered_flagged >= 0.80
          and after.verdict == "Tampered"
          and no_new_outside)
    _report(9, "tamper localization", ok,
            f"{covered_flagged:.0%} of covered masks flagged, "
            f"verdict {after.verdict}")


def test_criterion_10_coefficient_bit_round_trip():
    failures = 0
    for _ in range(10_000):
        c = float(_RNG.uniform(-700, 700))
        k = int(_RNG.integers(1, 5))
        positions = _RNG.permutation(6)[:k].tolist()
        bits = _RNG.integers(0, 2, k).tolist()
        got = extract_from_coefficient(
            embed_in_coefficient(c, bits, positions), positions)
        failures += got != bits
    _report(10, "coefficient bit round trip", failures == 0,
            f"{failures} failures")


def test_criterion_11_pgm_round_trip():
    ok = True
    for _ in range(50):
        h, w = _RNG.integers(1, 70, 2)
        img = Image(_RNG.integers(0, 256, (h, w)).astype(np.uint8))
        ok &= read_pgm(write_pgm(img, "P5")) == img
        ok &= read_pgm(write_pgm(img, "P2")) == img
    _report(11, "pgm round trip", ok)
