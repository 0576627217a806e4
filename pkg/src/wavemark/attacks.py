"""Tamper injection helpers for exercising the authenticator."""

from __future__ import annotations

import numpy as np


def _check_region(pixels: np.ndarray, x: int, y: int, w: int, h: int):
    if w < 0 or h < 0:
        raise ValueError("region width and height must be non-negative")
    rows, cols = pixels.shape
    if x < 0 or y < 0 or x + w > cols or y + h > rows:
        raise ValueError(
            f"region {w}x{h} at ({x}, {y}) exceeds image bounds {cols}x{rows}")


def zero_region(pixels: np.ndarray, x: int, y: int, w: int, h: int) -> np.ndarray:
    """Overwrite the rectangle (top-left x, y; size w x h) with zeros."""
    pixels = np.asarray(pixels)
    _check_region(pixels, x, y, w, h)
    out = pixels.copy()
    out[y:y + h, x:x + w] = 0
    return out


def noise_region(pixels: np.ndarray, x: int, y: int, w: int, h: int,
                 seed: int = 0, amplitude: int = 8) -> np.ndarray:
    """Add seeded uniform integer noise in [-amplitude, amplitude], clamped."""
    pixels = np.asarray(pixels)
    _check_region(pixels, x, y, w, h)
    out = pixels.astype(np.int64)
    rng = np.random.default_rng(seed)
    out[y:y + h, x:x + w] += rng.integers(-amplitude, amplitude + 1, (h, w))
    return np.clip(out, 0, 255).astype(np.uint8)
