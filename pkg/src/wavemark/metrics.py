"""Distortion measures: MSE, PSNR and image fidelity."""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

PEAK = 255.0


class QualityMetrics(NamedTuple):
    mse: float
    psnr: float            # dB; +inf when the images are identical
    image_fidelity: float


def _raster(img) -> np.ndarray:
    return np.asarray(getattr(img, "pixels", img), dtype=np.float64)


def _pair(a, b):
    a, b = _raster(a), _raster(b)
    if a.shape != b.shape:
        raise ValueError(f"image dimensions differ: {a.shape} vs {b.shape}")
    return a, b


def mse(a, b) -> float:
    """Mean squared pixel difference."""
    a, b = _pair(a, b)
    return float(((a - b) ** 2).mean())


def psnr_from_mse(err: float) -> float:
    """PSNR in dB for a known mean squared error: 10 log10(255^2 / mse)."""
    if err < 0:
        raise ValueError("mse cannot be negative")
    if err == 0.0:
        return math.inf
    return 10.0 * math.log10(PEAK * PEAK / err)


def psnr(a, b) -> float:
    """Peak signal-to-noise ratio in dB; +inf for identical images."""
    return psnr_from_mse(mse(a, b))


def image_fidelity(a, b) -> float:
    """1 - sum((a-b)^2) / sum(a^2), with a as the reference image."""
    a, b = _pair(a, b)
    ref_energy = float((a * a).sum())
    if ref_energy == 0.0:
        raise ValueError("image fidelity is undefined for an all-zero reference")
    return 1.0 - float(((a - b) ** 2).sum()) / ref_energy


def quality(a, b) -> QualityMetrics:
    """All three measures of b against reference a."""
    return QualityMetrics(mse(a, b), psnr(a, b), image_fidelity(a, b))
