"""Embedding a raster's own frequency signature and verifying it later.

Marking format
--------------
The cover is transformed tile by tile (4x4 Daubechies blocks). For each
mask the signature bytes set1 and set2 are computed from the mask's own
pre-embedding coefficients, whitened by a fixed XOR constant, split into
2-bit groups, and written into the least significant bits of the carrier
cells chosen by the site layout in :mod:`wavemark.signature`. Bit
surgery is plain AND/OR on the rounded coefficient magnitude, so values
change only in the selected LSB positions. After the inverse transform
the pixels are rounded and clamped back to 8 bits.

Whitening matters: without it any self-consistent region (for example a
rectangle overwritten with zeros) would carry extracted bits that
trivially equal its recomputed signature and tampering would go
unnoticed. XORing the payload with a fixed nonzero constant removes
that blind spot while staying key-free.

Spatial re-quantization can nudge a coefficient reading across an
integer boundary and corrupt embedded bits. Embedding therefore ends
with a bounded repair stage: masks whose payload does not survive a
round trip are re-rounded under small deterministic per-pixel offsets
until extraction succeeds (or the pass budget runs out). The stage is a
pure function of the mask content and its grid position, so results are
identical no matter how blocks are scheduled.

Verification re-extracts the whitened bits, recomputes both signature
bytes from the candidate's coefficients, and compares them per mask
with a wrapped byte distance; embedding itself perturbs the signature
by a couple of units at most, which the default tolerance absorbs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from . import signature as sig
from .pgm import Image
from .transform import (
    DAUB4,
    analysis_matrix,
    blocks_from_pixels,
    pad_to_blocks,
    pixels_from_blocks,
    round_half_away,
)

# Payload whitening constants; nonzero in every 2-bit band group so that
# uniform content never reads back as its own signature.
SET1_WHITENER = 0xA5
SET2_WHITENER = 0x5A


@dataclass(frozen=True)
class EmbedConfig:
    """Knobs shared by embedding and verification.

    mode           "set1" (0.5 bits per cover byte) or "set1set2" (1.0)
    max_lsb        modulus of the position hash; carriers use two LSBs
    tolerance      wrapped byte distance accepted as a match
    threshold      minimum match fraction for an Authentic verdict
    repair_passes  budget for the embed-side re-rounding stage
    """

    mode: str = sig.SET1
    max_lsb: int = 2
    tolerance: int = 4
    threshold: float = 0.95
    repair_passes: int = 64

    def __post_init__(self):
        if self.mode not in sig.MODES:
            raise ValueError(f"mode must be one of {sig.MODES}")
        if not 2 <= self.max_lsb <= 8:
            raise ValueError("max_lsb must lie in [2, 8]")
        if not 0 <= self.tolerance <= 255:
            raise ValueError("tolerance must lie in [0, 255]")
        if not 0.0 <= self.threshold <= 1.0:
            raise ValueError("threshold must lie in [0, 1]")
        if self.repair_passes < 0:
            raise ValueError("repair_passes must be non-negative")

    @property
    def dual(self) -> bool:
        return self.mode == sig.SET1_SET2

    @property
    def bytes_per_mask(self) -> int:
        return 2 if self.dual else 1


class MaskAuthResult(NamedTuple):
    mask_row: int
    mask_col: int
    extracted_set1: int
    recomputed_set1: int
    extracted_set2: Optional[int]
    recomputed_set2: Optional[int]
    matched: bool


@dataclass
class AuthReport:
    """Per-mask comparison results plus the image-level verdict."""

    matched: np.ndarray                 # (rows, cols) bool
    extracted_set1: np.ndarray
    recomputed_set1: np.ndarray
    extracted_set2: Optional[np.ndarray]
    recomputed_set2: Optional[np.ndarray]
    tolerance: int
    threshold: float

    @property
    def grid_shape(self):
        return self.matched.shape

    @property
    def match_fraction(self) -> float:
        return float(self.matched.mean())

    @property
    def authentic(self) -> bool:
        return self.match_fraction >= self.threshold

    @property
    def verdict(self) -> str:
        return "Authentic" if self.authentic else "Tampered"

    @property
    def tamper_map(self) -> np.ndarray:
        """Mask-resolution raster: 0 where matched, 255 where not."""
        return np.where(self.matched, 0, 255).astype(np.uint8)

    def result_at(self, mask_row: int, mask_col: int) -> MaskAuthResult:
        r, c = mask_row, mask_col
        dual = self.extracted_set2 is not None
        return MaskAuthResult(
            r, c,
            int(self.extracted_set1[r, c]), int(self.recomputed_set1[r, c]),
            int(self.extracted_set2[r, c]) if dual else None,
            int(self.recomputed_set2[r, c]) if dual else None,
            bool(self.matched[r, c]),
        )


def wrapped_distance(a, b):
    """Byte distance on the mod-256 circle: min(|a-b|, 256-|a-b|)."""
    d = np.abs(np.asarray(a, dtype=np.int64) - np.asarray(b, dtype=np.int64))
    return np.minimum(d, 256 - d)


def embed_in_coefficient(c: float, bits, positions) -> float:
    """Force the given bits into LSB positions of a coefficient.

    The coefficient is rounded (half away from zero) and the bits are
    ANDed/ORed into the magnitude, so the result differs from the
    rounded value only in the listed positions; the sign is kept, with
    zero treated as positive.
    """
    if len(bits) != len(positions):
        raise ValueError("bits and positions must have equal length")
    if len(set(positions)) != len(positions):
        raise ValueError("positions must be distinct")
    q = int(round_half_away(float(c)))
    m = abs(q)
    for b, p in zip(bits, positions):
        m = (m & ~(1 << p)) | ((1 << p) if b else 0)
    return float(-m if q < 0 else m)


def extract_from_coefficient(c: float, positions) -> list:
    """Read bits back from the rounded coefficient magnitude."""
    if len(set(positions)) != len(positions):
        raise ValueError("positions must be distinct")
    m = abs(int(round_half_away(float(c))))
    return [(m >> p) & 1 for p in positions]


def payload_capacity(width: int, height: int, mode: str = sig.SET1) -> int:
    """Signature bytes embedded in a width x height cover (after padding)."""
    if mode not in sig.MODES:
        raise ValueError(f"mode must be one of {sig.MODES}")
    masks = ((height + 3) // 4) * ((width + 3) // 4)
    return masks * (2 if mode == sig.SET1_SET2 else 1)


# ---------------------------------------------------------------------------
# vectorized pipeline internals
# ---------------------------------------------------------------------------

_MAT = analysis_matrix(DAUB4)


def _fdt_all(blocks: np.ndarray) -> np.ndarray:
    # association order matches fdt_block for bit-identical coefficients
    return (_MAT @ blocks) @ _MAT.T


def _idt_all(coeffs: np.ndarray) -> np.ndarray:
    return (_MAT.T @ coeffs) @ _MAT


def _signature_bytes(coeffs: np.ndarray):
    """(set1, set2) byte arrays for a stack of coefficient masks."""
    s1 = round_half_away(coeffs.mean(axis=(1, 2))).astype(np.int64) % 256
    s2 = round_half_away(coeffs[:, :2, :2].mean(axis=(1, 2))).astype(np.int64) % 256
    return s1, s2


def _site_targets(cfg: EmbedConfig, w1: np.ndarray, w2: np.ndarray):
    """Per-site (cell_row, cell_col, positions, bits) with vector bits.

    bits[j] is the bit array destined for positions[j]; band groups are
    MSB first, matching signature.distribute_bits.
    """
    targets = []
    for site in sig.sites_for_mask(0, 0, cfg.mode, cfg.max_lsb):
        band_index = sig.BANDS.index(site.band)
        source = w1 if site.source == sig.SET1 else w2
        hi = (source >> (7 - 2 * band_index)) & 1
        lo = (source >> (6 - 2 * band_index)) & 1
        targets.append((site.cell_row, site.cell_col, site.bit_positions,
                        (hi, lo)))
    return targets


def _force_bits(coeffs: np.ndarray, targets) -> None:
    for row, col, positions, bits in targets:
        q = round_half_away(coeffs[:, row, col]).astype(np.int64)
        m = np.abs(q)
        for b, p in zip(bits, positions):
            m = (m & ~(1 << p)) | (b << p)
        coeffs[:, row, col] = np.where(q < 0, -m, m).astype(np.float64)


def _payload_survives(int_blocks: np.ndarray, targets, sel) -> np.ndarray:
    """True per block where re-reading the coefficients yields the bits."""
    coeffs = _fdt_all(int_blocks)
    ok = np.ones(int_blocks.shape[0], dtype=bool)
    for row, col, positions, bits in targets:
        m = np.abs(round_half_away(coeffs[:, row, col]).astype(np.int64))
        for b, p in zip(bits, positions):
            ok &= ((m >> p) & 1) == b[sel]
    return ok


def _splitmix64(x: np.ndarray) -> np.ndarray:
    x = x + np.uint64(0x9E3779B97F4A7C15)
    x = (x ^ (x >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    x = (x ^ (x >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return x ^ (x >> np.uint64(31))


def _dither(rows: np.ndarray, cols: np.ndarray, npass: int,
            amplitude: float) -> np.ndarray:
    """Deterministic per-pixel offsets in [-amplitude, amplitude].

    Keyed only by the mask's grid position, the pass number and the
    pixel index, so repair is reproducible and independent of which
    other masks needed it.
    """
    pix = np.arange(16, dtype=np.uint64)
    key = ((rows.astype(np.uint64) << np.uint64(40))
           ^ (cols.astype(np.uint64) << np.uint64(20))
           ^ np.uint64(npass * 0x9E37))
    u = _splitmix64(key[:, None] * np.uint64(0x100000001B3) + pix[None, :])
    unit = (u >> np.uint64(11)).astype(np.float64) * 2.0 ** -53
    return ((unit - 0.5) * (2.0 * amplitude)).reshape(-1, 4, 4)


def embed_pixels(pixels: np.ndarray, cfg: EmbedConfig = EmbedConfig()):
    """Embed the self-signature; returns (stego uint8 raster, bytes embedded).

    Images whose dimensions are not multiples of 4 are padded by edge
    replication for the transform and cropped back afterwards.
    """
    pixels = np.asarray(pixels)
    if pixels.ndim != 2:
        raise ValueError("expected a 2-D grayscale raster")
    height, width = pixels.shape
    padded = pad_to_blocks(pixels)
    nbr, nbc = padded.shape[0] // 4, padded.shape[1] // 4

    blocks = blocks_from_pixels(padded)
    flat = blocks.reshape(-1, 4, 4)
    coeffs = _fdt_all(flat)

    set1, set2 = _signature_bytes(coeffs)
    w1 = set1 ^ SET1_WHITENER
    w2 = set2 ^ SET2_WHITENER
    targets = _site_targets(cfg, w1, w2)
    embedded_bytes = flat.shape[0] * cfg.bytes_per_mask

    _force_bits(coeffs, targets)
    real = _idt_all(coeffs)
    stego = np.clip(round_half_away(real), 0, 255)

    ok = _payload_survives(stego, targets, slice(None))
    rows, cols = np.divmod(np.arange(flat.shape[0]), nbc)
    for npass in range(1, cfg.repair_passes + 1):
        if ok.all():
            break
        bad = np.flatnonzero(~ok)
        amp = 0.10 + 0.39 * npass / cfg.repair_passes
        offsets = _dither(rows[bad], cols[bad], npass, amp)
        candidate = np.clip(round_half_away(real[bad] + offsets), 0, 255)
        good = _payload_survives(candidate, targets, bad)
        stego[bad[good]] = candidate[good]
        ok[bad[good]] = True

    out = pixels_from_blocks(stego.reshape(nbr, nbc, 4, 4))
    return out[:height, :width].astype(np.uint8), embedded_bytes


def authenticate_pixels(pixels: np.ndarray,
                        cfg: EmbedConfig = EmbedConfig()) -> AuthReport:
    """Extract the embedded signature and compare it with a recomputed one."""
    pixels = np.asarray(pixels)
    if pixels.ndim != 2:
        raise ValueError("expected a 2-D grayscale raster")
    padded = pad_to_blocks(pixels)
    nbr, nbc = padded.shape[0] // 4, padded.shape[1] // 4

    flat = blocks_from_pixels(padded).reshape(-1, 4, 4)
    coeffs = _fdt_all(flat)

    raw1 = np.zeros(flat.shape[0], dtype=np.int64)
    raw2 = np.zeros(flat.shape[0], dtype=np.int64)
    for site in sig.sites_for_mask(0, 0, cfg.mode, cfg.max_lsb):
        band_index = sig.BANDS.index(site.band)
        m = np.abs(round_half_away(
            coeffs[:, site.cell_row, site.cell_col]).astype(np.int64))
        hi = (m >> site.bit_positions[0]) & 1
        lo = (m >> site.bit_positions[1]) & 1
        value = (hi << (7 - 2 * band_index)) | (lo << (6 - 2 * band_index))
        if site.source == sig.SET1:
            raw1 |= value
        else:
            raw2 |= value

    extracted1 = raw1 ^ SET1_WHITENER
    extracted2 = raw2 ^ SET2_WHITENER
    recomputed1, recomputed2 = _signature_bytes(coeffs)

    matched = wrapped_distance(extracted1, recomputed1) <= cfg.tolerance
    if cfg.dual:
        matched &= wrapped_distance(extracted2, recomputed2) <= cfg.tolerance

    shape = (nbr, nbc)
    return AuthReport(
        matched=matched.reshape(shape),
        extracted_set1=extracted1.reshape(shape),
        recomputed_set1=recomputed1.reshape(shape),
        extracted_set2=extracted2.reshape(shape) if cfg.dual else None,
        recomputed_set2=recomputed2.reshape(shape) if cfg.dual else None,
        tolerance=cfg.tolerance,
        threshold=cfg.threshold,
    )


def embed_image(cover: Image, cfg: EmbedConfig = EmbedConfig()) -> Image:
    """Embed into an Image; output dimensions equal the input's."""
    stego, _ = embed_pixels(cover.pixels, cfg)
    return Image(stego)


def authenticate_image(candidate: Image,
                       cfg: EmbedConfig = EmbedConfig()) -> AuthReport:
    """Authenticate an Image against its own embedded signature."""
    return authenticate_pixels(candidate.pixels, cfg)
