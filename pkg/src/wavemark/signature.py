"""Per-mask signature bytes and the LSB embedding-site layout.

Every 4x4 coefficient mask yields up to two signature bytes:

    set1  byte-wrapped average of all 16 coefficients
    set2  byte-wrapped average of the 2x2 AF quadrant

Each byte is split MSB first into four 2-bit groups assigned to the
bands AF, HF, VF, DF. A group is embedded into the two least
significant bit positions selected by a small hash of the target cell
inside the mask. The cells carrying payload are the third cell of each
band in row-major order (set1), plus the second cell (set2 in dual
mode); no two carrier cells are horizontally or vertically adjacent:

        .  2  .  2        1 = set1 carrier (P10 P12 P30 P32)
        1  .  1  .        2 = set2 carrier (P01 P03 P21 P23)
        .  2  .  2
        1  .  1  .
"""

from __future__ import annotations

from typing import NamedTuple, Optional

import numpy as np

from .transform import QUADRANTS, round_half_away

SET1 = "set1"
SET1_SET2 = "set1set2"
MODES = (SET1, SET1_SET2)

BANDS = ("AF", "HF", "VF", "DF")

# Third cell of each band, row-major within the 2x2 quadrant.
PRIMARY_CELLS = {"AF": (1, 0), "HF": (1, 2), "VF": (3, 0), "DF": (3, 2)}
# Second cell of each band; diagonal neighbour of the third.
SECONDARY_CELLS = {"AF": (0, 1), "HF": (0, 3), "VF": (2, 1), "DF": (2, 3)}

BITS_PER_BAND = {SET1: 2, SET1_SET2: 4}


class EmbedSite(NamedTuple):
    """One payload carrier: a cell of a mask plus its LSB positions."""

    mask_row: int
    mask_col: int
    cell_row: int
    cell_col: int
    band: str
    source: str          # "set1" or "set2"
    bit_positions: tuple


def byte_wrap(value: float) -> int:
    """Map any finite real to a byte: round half away from zero, mod 256."""
    return int(round_half_away(float(value))) % 256


def set1_byte(mask) -> int:
    """Signature byte from the average of all 16 coefficients."""
    return byte_wrap(np.asarray(mask, dtype=np.float64).mean())


def set2_byte(mask) -> int:
    """Signature byte from the average of the AF quadrant."""
    return byte_wrap(np.asarray(mask, dtype=np.float64)[QUADRANTS["AF"]].mean())


def hash_position(cell_row: int, cell_col: int, bits_per_band: int,
                  max_lsb: int) -> int:
    """First LSB position for a cell: ((col + 4 row) + bits) mod max_lsb."""
    if not (0 <= cell_row <= 3 and 0 <= cell_col <= 3):
        raise ValueError("cell indices must lie in [0, 3]")
    if bits_per_band not in (2, 4):
        raise ValueError("bits_per_band must be 2 or 4")
    if max_lsb < 2:
        raise ValueError("max_lsb must be at least 2")
    return ((cell_col + cell_row * 4) + bits_per_band) % max_lsb


def _split_msb_first(value: int, count: int) -> list:
    return [(value >> (count - 1 - i)) & 1 for i in range(count)]


def distribute_bits(set1: int, set2: Optional[int] = None) -> dict:
    """Split signature bytes into per-band bit groups, MSB first.

    With set1 alone each band receives two bits of set1. In dual mode
    each band receives its two set1 bits followed by its two set2 bits.
    Concatenating the groups in band order reconstructs the bytes.
    """
    groups = {}
    b1 = _split_msb_first(set1, 8)
    b2 = _split_msb_first(set2, 8) if set2 is not None else None
    for i, band in enumerate(BANDS):
        group = b1[2 * i:2 * i + 2]
        if b2 is not None:
            group = group + b2[2 * i:2 * i + 2]
        groups[band] = group
    return groups


def collect_bits(groups: dict) -> tuple:
    """Inverse of distribute_bits: (set1, set2 or None) from band groups."""
    set1 = 0
    set2 = 0
    dual = len(groups[BANDS[0]]) == 4
    for i, band in enumerate(BANDS):
        group = groups[band]
        set1 |= (group[0] << 1 | group[1]) << (6 - 2 * i)
        if dual:
            set2 |= (group[2] << 1 | group[3]) << (6 - 2 * i)
    return set1, (set2 if dual else None)


def sites_for_mask(mask_row: int, mask_col: int, mode: str = SET1,
                   max_lsb: int = 2) -> tuple:
    """Embedding sites of one mask: 4 in set1 mode, 8 in dual mode.

    Every site carries two bits at positions [H, H+1] (mod max_lsb)
    where H comes from hash_position. The cell and position layout does
    not depend on the grid indices; they only label the site.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    bpb = BITS_PER_BAND[mode]
    sites = []
    for band in BANDS:
        row, col = PRIMARY_CELLS[band]
        start = hash_position(row, col, bpb, max_lsb)
        positions = (start, (start + 1) % max_lsb)
        sites.append(EmbedSite(mask_row, mask_col, row, col, band, SET1,
                               positions))
    if mode == SET1_SET2:
        for band in BANDS:
            row, col = SECONDARY_CELLS[band]
            start = hash_position(row, col, bpb, max_lsb)
            positions = (start, (start + 1) % max_lsb)
            sites.append(EmbedSite(mask_row, mask_col, row, col, band,
                                   "set2", positions))
    return tuple(sites)
