#!/usr/bin/env python3
"""Fetch the USC-SIPI 'miscellaneous' volume and convert covers to PGM.

The USC-SIPI image database (https://sipi.usc.edu/database/) is the
classic source of the 512x512 grayscale test images used to evaluate
watermarking schemes. Its redistribution terms are not ours to grant,
so this repository ships synthetic covers instead and this script lets
you pull the real set yourself:

    python scripts/fetch_usc_sipi.py [DEST_DIR]

Downloads misc.tar.gz (~12 MB), converts every 512x512 single-channel
TIFF to PGM under DEST_DIR (default: corpus/), and skips color images.
Requires network access and Pillow (pip install Pillow). If the
download fails, grab the archive manually from the database page and
rerun with the file already placed at DEST_DIR/misc.tar.gz.
"""

import io
import sys
import tarfile
import urllib.request
from pathlib import Path

ARCHIVE_URL = "https://sipi.usc.edu/database/misc.tar.gz"


def main() -> int:
    try:
        from PIL import Image as PILImage
    except ImportError:
        print("Pillow is required: pip install Pillow", file=sys.stderr)
        return 2

    dest = Path(sys.argv[1] if len(sys.argv) > 1 else "corpus")
    dest.mkdir(parents=True, exist_ok=True)
    archive = dest / "misc.tar.gz"

    if not archive.exists():
        print(f"downloading {ARCHIVE_URL} ...")
        try:
            urllib.request.urlretrieve(ARCHIVE_URL, archive)
        except OSError as exc:
            print(f"download failed: {exc}", file=sys.stderr)
            print(f"fetch the archive manually and save it as {archive}",
                  file=sys.stderr)
            return 2

    converted = 0
    with tarfile.open(archive) as tar:
        for member in tar.getmembers():
            if not member.name.lower().endswith((".tiff", ".tif")):
                continue
            data = tar.extractfile(member)
            if data is None:
                continue
            img = PILImage.open(io.BytesIO(data.read()))
            if img.size != (512, 512) or img.mode not in ("L", "I;16", "1"):
                continue
            out = dest / (Path(member.name).stem + ".pgm")
            img.convert("L").save(out)
            converted += 1
            print(f"  {out}")
    print(f"converted {converted} grayscale 512x512 images to {dest}/")
    print("run the benchmark with: wavemark bench "
          f"{dest} report.csv --mode set1")
    return 0 if converted else 1


if __name__ == "__main__":
    sys.exit(main())
