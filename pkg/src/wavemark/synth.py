"""Deterministic synthetic test images.

Stand-ins for a natural-image corpus: mid-toned rasters mixing smooth
shading, oriented texture and mild noise, away from the 0/255 rails so
the embedded payload is never destroyed by clamping.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .pgm import Image, save
from .transform import round_half_away


def _smooth3(arr: np.ndarray, axis: int) -> np.ndarray:
    padded = np.pad(arr, [(1, 1) if ax == axis else (0, 0)
                          for ax in range(arr.ndim)], mode="edge")
    idx = [slice(None)] * arr.ndim
    out = np.zeros_like(arr)
    for k in range(3):
        idx[axis] = slice(k, k + arr.shape[axis])
        out = out + padded[tuple(idx)]
    return out / 3.0


def make_test_image(seed: int, size: int = 512) -> np.ndarray:
    """One synthetic grayscale raster, fully determined by the seed."""
    rng = np.random.default_rng(1_000_003 * seed + 17)
    yy, xx = np.mgrid[0:size, 0:size].astype(np.float64) / size
    img = np.full((size, size), 130.0)
    for _ in range(6):
        fx, fy = rng.uniform(0.5, 6.0, 2)
        phase = rng.uniform(0.0, 2.0 * np.pi)
        img += rng.uniform(10.0, 28.0) * np.cos(2 * np.pi * (fx * xx + fy * yy) + phase)
    # a couple of soft blobs for local structure
    for _ in range(3):
        cx, cy = rng.uniform(0.1, 0.9, 2)
        r = rng.uniform(0.05, 0.2)
        img += rng.uniform(-25.0, 25.0) * np.exp(-((xx - cx) ** 2 + (yy - cy) ** 2) / (2 * r * r))
    texture = rng.normal(0.0, 8.0, (size, size))
    texture = _smooth3(_smooth3(texture, 0), 1)
    img += texture + rng.normal(0.0, 4.0, (size, size))
    return np.clip(round_half_away(img), 12, 243).astype(np.uint8)


def write_corpus(directory, count: int = 10, size: int = 512,
                 first_seed: int = 0) -> list:
    """Write ``count`` synthetic PGM covers; returns the file paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for i in range(count):
        path = directory / f"synthetic_{i:02d}.pgm"
        save(path, Image(make_test_image(first_seed + i, size)))
        paths.append(path)
    return paths
