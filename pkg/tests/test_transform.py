import math

import numpy as np
import pytest

from wavemark.transform import (
    DAUB4,
    NumericError,
    analysis_matrix,
    fdt_block,
    fdt_image,
    idt_block,
    idt_image,
    pad_to_blocks,
    round_half_away,
)


def reference_fdt(block):
    """Independent oracle: direct evaluation of the periodic filter sums."""
    h, g = DAUB4
    out = np.zeros((4, 4))
    rowpass = np.zeros((4, 4))
    for i in range(4):
        for k in range(2):
            rowpass[i, k] = sum(h[n] * block[i, (2 * k + n) % 4] for n in range(4))
            rowpass[i, 2 + k] = sum(g[n] * block[i, (2 * k + n) % 4] for n in range(4))
    for j in range(4):
        for k in range(2):
            out[k, j] = sum(h[n] * rowpass[(2 * k + n) % 4, j] for n in range(4))
            out[2 + k, j] = sum(g[n] * rowpass[(2 * k + n) % 4, j] for n in range(4))
    return out


def test_filter_identities():
    h, g = DAUB4
    assert abs(h.sum() - math.sqrt(2)) < 1e-12
    assert abs(g.sum()) < 1e-12
    assert abs((h * h).sum() - 1.0) < 1e-12
    assert abs((g * g).sum() - 1.0) < 1e-12
    assert abs((h * g).sum()) < 1e-12
    assert np.allclose(g, [h[3], -h[2], h[1], -h[0]])


def test_analysis_matrix_orthogonal():
    a = analysis_matrix()
    assert np.abs(a @ a.T - np.eye(4)).max() < 1e-12


def test_fdt_matches_filter_sum_oracle(rng):
    for _ in range(200):
        block = rng.uniform(-300, 300, (4, 4))
        assert np.abs(fdt_block(block) - reference_fdt(block)).max() < 1e-10


def test_zero_and_constant_blocks():
    assert np.abs(fdt_block(np.zeros((4, 4)))).max() == 0.0
    mask = fdt_block(np.full((4, 4), 128.0))
    assert np.abs(mask[:2, :2] - 256.0).max() < 1e-9
    details = mask.copy()
    details[:2, :2] = 0.0
    assert np.abs(details).max() < 1e-9


def test_energy_preserved(rng):
    for _ in range(100):
        block = rng.uniform(0, 255, (4, 4))
        c = fdt_block(block)
        assert abs((c * c).sum() - (block * block).sum()) < 1e-9


def test_linearity(rng):
    x, y = rng.uniform(-50, 50, (2, 4, 4))
    lhs = fdt_block(2.5 * x - 1.25 * y)
    rhs = 2.5 * fdt_block(x) - 1.25 * fdt_block(y)
    assert np.abs(lhs - rhs).max() < 1e-9


def test_perfect_reconstruction(rng):
    worst = 0.0
    for _ in range(1000):
        block = rng.uniform(-500, 500, (4, 4))
        worst = max(worst, np.abs(idt_block(fdt_block(block)) - block).max())
    assert worst < 1e-9


def test_idt_constant_case():
    mask = np.zeros((4, 4))
    mask[:2, :2] = 256.0
    assert np.abs(idt_block(mask) - 128.0).max() < 1e-9
    assert np.abs(idt_block(np.zeros((4, 4)))).max() == 0.0


def test_non_finite_rejected():
    bad = np.zeros((4, 4))
    bad[1, 2] = np.nan
    with pytest.raises(NumericError):
        fdt_block(bad)
    bad[1, 2] = np.inf
    with pytest.raises(NumericError):
        idt_block(bad)


def test_fdt_image_grid_and_tiling(rng):
    img = rng.integers(0, 256, (512, 512)).astype(np.uint8)
    coeffs = fdt_image(img)
    assert coeffs.shape == (128, 128, 4, 4)
    assert coeffs.shape[0] * coeffs.shape[1] == 16_384

    flat = np.full((64, 64), 128, np.uint8)
    cflat = fdt_image(flat)
    assert np.abs(cflat[:, :, :2, :2] - 256.0).max() < 1e-9

    wide = rng.integers(0, 256, (4, 8)).astype(np.uint8)
    cw = fdt_image(wide)
    assert cw.shape[:2] == (1, 2)
    assert np.abs(cw[0, 1] - fdt_block(wide[:, 4:8].astype(float))).max() < 1e-12


def test_block_independence(rng):
    img = rng.integers(0, 256, (32, 32)).astype(np.uint8)
    other = img.copy()
    other[8:12, 20:24] ^= 0x55
    diff = np.abs(fdt_image(img) - fdt_image(other)).max(axis=(2, 3)) > 0
    assert diff.sum() == 1 and diff[2, 5]


def test_image_round_trip_exact(rng):
    for shape in [(16, 16), (64, 32), (128, 128)]:
        img = rng.integers(0, 256, shape).astype(np.uint8)
        assert np.array_equal(idt_image(fdt_image(img)), img)


def test_batched_tiles_match_scalar_blocks_exactly(rng):
    """Whole-image transform equals per-tile fdt_block bit for bit."""
    img = rng.integers(0, 256, (64, 64)).astype(np.uint8)
    coeffs = fdt_image(img)
    for r in range(16):
        for c in range(16):
            tile = img[4 * r:4 * r + 4, 4 * c:4 * c + 4].astype(float)
            assert np.array_equal(coeffs[r, c], fdt_block(tile))


def test_idt_image_clamps():
    coeffs = np.zeros((1, 1, 4, 4))
    coeffs[0, 0, :2, :2] = 600.0  # reconstructs to constant 300
    assert (idt_image(coeffs) == 255).all()
    assert (idt_image(np.zeros((2, 3, 4, 4))) == 0).all()


def test_fdt_image_requires_block_multiple():
    with pytest.raises(ValueError):
        fdt_image(np.zeros((5, 8)))


def test_pad_to_blocks_edge_replication():
    img = np.arange(6, dtype=np.uint8).reshape(2, 3)
    padded = pad_to_blocks(img)
    assert padded.shape == (4, 4)
    assert padded[0].tolist() == [0, 1, 2, 2]
    assert np.array_equal(padded[2], padded[1])


def test_round_half_away():
    vals = round_half_away(np.array([0.5, 1.5, -0.5, -1.5, 2.4, -2.4, 0.0]))
    assert vals.tolist() == [1, 2, -1, -2, 2, -2, 0]
