"""Walk through the 4x4 block transform: filters, quadrants, reconstruction.

Run from the repository root after installing the package:

    python demos/01_block_transform.py
"""

import numpy as np

from wavemark import DAUB4, fdt_block, fdt_image, idt_block, idt_image
from wavemark.synth import make_test_image

h, g = DAUB4
print("low-pass taps :", np.round(h, 6))
print("high-pass taps:", np.round(g, 6))
print(f"sum(h) = {h.sum():.12f}  (sqrt 2 = {np.sqrt(2):.12f})")
print(f"sum(g) = {g.sum():+.1e},  |h|^2 = {h @ h:.12f},  h.g = {h @ g:+.1e}")
print()

block = np.array([
    [52, 55, 61, 66],
    [70, 61, 64, 73],
    [63, 59, 55, 90],
    [67, 61, 68, 104],
], dtype=float)
mask = fdt_block(block)
print("one 4x4 pixel block:")
print(block.astype(int))
print("its coefficient mask (AF | HF over VF | DF):")
print(np.round(mask, 2))
print()

print("quadrant energies, as a share of the block energy:")
total = (mask ** 2).sum()
for name, (rs, cs) in [("AF", (slice(0, 2), slice(0, 2))),
                       ("HF", (slice(0, 2), slice(2, 4))),
                       ("VF", (slice(2, 4), slice(0, 2))),
                       ("DF", (slice(2, 4), slice(2, 4)))]:
    share = (mask[rs, cs] ** 2).sum() / total
    print(f"  {name}: {share:7.2%}")
print("most energy sits in AF, the low-frequency average band")
print()

restored = idt_block(mask)
print(f"reconstruction error of the inverse: {np.abs(restored - block).max():.2e}")

image = make_test_image(0, 256)
coeffs = fdt_image(image)
print(f"\n256x256 image -> coefficient grid {coeffs.shape[:2]} "
      f"({coeffs.shape[0] * coeffs.shape[1]} masks)")
round_trip = idt_image(coeffs)
print("pixel-exact image round trip:", bool(np.array_equal(round_trip, image)))
