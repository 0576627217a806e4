"""Forward and inverse Daubechies-4 transform on independent 4x4 blocks.

The four-tap analysis pair is

    h[0] = (1 + sqrt 3) / (4 sqrt 2)     g[0] =  h[3]
    h[1] = (3 + sqrt 3) / (4 sqrt 2)     g[1] = -h[2]
    h[2] = (3 - sqrt 3) / (4 sqrt 2)     g[2] =  h[1]
    h[3] = (1 - sqrt 3) / (4 sqrt 2)     g[3] = -h[0]

On a length-4 signal with periodic extension the one-dimensional analysis

    a[k] = sum_n h[n] x[(2k + n) mod 4]
    d[k] = sum_n g[n] x[(2k + n) mod 4]        k in {0, 1}

is an orthogonal 4x4 circulant, so the synthesis operator is its
transpose and reconstruction is exact. Applying it to the rows and then
the columns of a 4x4 pixel block yields one coefficient mask laid out in
four 2x2 quadrants:

    AF  HF      AF rows 0-1 cols 0-1 (average / low frequency)
    VF  DF      HF cols 2-3, VF rows 2-3, DF rows 2-3 cols 2-3

Whole images are transformed tile by tile: the mask at block position
(r, c) covers pixel rows 4r..4r+3 and columns 4c..4c+3.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np


class NumericError(ValueError):
    """Raised when a transform input contains non-finite values."""


class FilterBank(NamedTuple):
    """Analysis filter pair: four low-pass and four high-pass taps."""

    lowpass: np.ndarray
    highpass: np.ndarray


def daubechies4() -> FilterBank:
    """The D4 filter bank used throughout this package."""
    s3 = math.sqrt(3.0)
    norm = 4.0 * math.sqrt(2.0)
    h = np.array([(1 + s3) / norm, (3 + s3) / norm,
                  (3 - s3) / norm, (1 - s3) / norm])
    g = np.array([h[3], -h[2], h[1], -h[0]])
    return FilterBank(h, g)


DAUB4 = daubechies4()

# Quadrant slices of a 4x4 coefficient mask.
QUADRANTS = {
    "AF": (slice(0, 2), slice(0, 2)),
    "HF": (slice(0, 2), slice(2, 4)),
    "VF": (slice(2, 4), slice(0, 2)),
    "DF": (slice(2, 4), slice(2, 4)),
}


def analysis_matrix(fb: FilterBank = DAUB4) -> np.ndarray:
    """4x4 orthogonal matrix of the periodic one-dimensional analysis.

    Rows 0-1 produce the approximation samples a[0], a[1] and rows 2-3
    the detail samples d[0], d[1].
    """
    h, g = fb
    mat = np.empty((4, 4))
    for k in range(2):
        for n in range(4):
            mat[k, (2 * k + n) % 4] = h[n]
            mat[2 + k, (2 * k + n) % 4] = g[n]
    return mat


_A = analysis_matrix()


def _matrix(fb: FilterBank) -> np.ndarray:
    return _A if fb is DAUB4 else analysis_matrix(fb)


def _check_finite(arr: np.ndarray) -> np.ndarray:
    arr = np.asarray(arr, dtype=np.float64)
    if arr.shape[-2:] != (4, 4):
        raise ValueError("expected a 4x4 block")
    if not np.isfinite(arr).all():
        raise NumericError("input contains non-finite values")
    return arr


def fdt_block(pixels, fb: FilterBank = DAUB4) -> np.ndarray:
    """Forward transform of one 4x4 block into the AF/HF/VF/DF layout."""
    block = _check_finite(pixels)
    mat = _matrix(fb)
    return mat @ block @ mat.T


def idt_block(mask, fb: FilterBank = DAUB4) -> np.ndarray:
    """Inverse of fdt_block; exact up to floating-point rounding."""
    coeffs = _check_finite(mask)
    mat = _matrix(fb)
    return mat.T @ coeffs @ mat


def round_half_away(values):
    """Round to nearest integer with halves away from zero."""
    values = np.asarray(values)
    return np.sign(values) * np.floor(np.abs(values) + 0.5)


def blocks_from_pixels(pixels: np.ndarray) -> np.ndarray:
    """Split an (H, W) raster into an (H/4, W/4, 4, 4) tile array."""
    h, w = pixels.shape
    if h % 4 or w % 4:
        raise ValueError("image dimensions must be multiples of 4")
    return (pixels.reshape(h // 4, 4, w // 4, 4)
            .swapaxes(1, 2)
            .astype(np.float64))


def pixels_from_blocks(blocks: np.ndarray) -> np.ndarray:
    """Inverse of blocks_from_pixels."""
    nbr, nbc = blocks.shape[:2]
    return blocks.swapaxes(1, 2).reshape(nbr * 4, nbc * 4)


def fdt_image(pixels, fb: FilterBank = DAUB4) -> np.ndarray:
    """Transform every disjoint 4x4 tile of an image independently.

    Returns coefficient masks as an array of shape (H/4, W/4, 4, 4).
    The input must already be padded to multiple-of-4 dimensions (see
    pad_to_blocks).
    """
    blocks = blocks_from_pixels(np.asarray(pixels, dtype=np.float64))
    if not np.isfinite(blocks).all():
        raise NumericError("input contains non-finite values")
    mat = _matrix(fb)
    # same association order as fdt_block so tiles match it bit for bit
    return (mat @ blocks) @ mat.T


def idt_image(coeffs, fb: FilterBank = DAUB4) -> np.ndarray:
    """Invert fdt_image and quantize back to pixels.

    Each reconstructed value is rounded to the nearest integer (halves
    away from zero) and clamped to [0, 255]; returns a uint8 raster.
    """
    coeffs = np.asarray(coeffs, dtype=np.float64)
    mat = _matrix(fb)
    blocks = (mat.T @ coeffs) @ mat
    pixels = pixels_from_blocks(blocks)
    return np.clip(round_half_away(pixels), 0, 255).astype(np.uint8)


def pad_to_blocks(pixels: np.ndarray) -> np.ndarray:
    """Pad right/bottom by edge replication to multiple-of-4 dimensions."""
    h, w = pixels.shape
    return np.pad(pixels, ((0, (-h) % 4), (0, (-w) % 4)), mode="edge")
