"""Reading and writing 8-bit grayscale images in PGM format.

Both the binary (P5) and plain-text (P2) encodings are supported. Header
parsing follows the usual Netpbm conventions: tokens are separated by any
run of whitespace and '#' starts a comment that runs to the end of the
line. Only single-channel images with a maxval of at most 255 are
accepted; deeper rasters are rejected rather than rescaled.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


class FormatError(ValueError):
    """Raised for malformed PGM data (bad magic, header, or raster size)."""


class TruncatedError(FormatError):
    """Raised when the raster ends before width * height samples."""


class UnsupportedError(ValueError):
    """Raised for valid PGM files outside scope (maxval > 255)."""


@dataclass
class Image:
    """Grayscale raster with unsigned 8-bit samples.

    ``pixels`` is a 2-D uint8 array of shape (height, width), row major.
    ``maxval`` is always 255; files declaring a smaller maxval are read
    without rescaling.
    """

    pixels: np.ndarray
    maxval: int = field(default=255)

    def __post_init__(self):
        px = np.asarray(self.pixels)
        if px.ndim != 2 or px.size == 0:
            raise ValueError("pixels must be a non-empty 2-D array")
        if px.dtype != np.uint8:
            if px.min() < 0 or px.max() > 255:
                raise ValueError("pixel values must lie in [0, 255]")
            px = px.astype(np.uint8)
        self.pixels = px
        if self.maxval != 255:
            raise ValueError("only 8-bit images (maxval 255) are supported")

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Image):
            return NotImplemented
        return (self.pixels.shape == other.pixels.shape
                and self.maxval == other.maxval
                and bool(np.array_equal(self.pixels, other.pixels)))


def _header_tokens(data: bytes, count: int):
    """Yield ``count`` whitespace-separated header tokens, skipping comments.

    Returns (tokens, offset of the first byte after the final token's
    single trailing whitespace byte).
    """
    tokens = []
    i = 0
    n = len(data)
    while len(tokens) < count:
        while i < n and data[i:i + 1].isspace():
            i += 1
        if i < n and data[i] == ord("#"):
            while i < n and data[i] not in (ord("\n"), ord("\r")):
                i += 1
            continue
        start = i
        while i < n and not data[i:i + 1].isspace() and data[i] != ord("#"):
            i += 1
        if i == start:
            raise TruncatedError("unexpected end of header")
        tokens.append(data[start:i])
    if i >= n or not data[i:i + 1].isspace():
        raise FormatError("missing whitespace after header")
    return tokens, i + 1


def read_pgm(data: bytes) -> Image:
    """Parse PGM bytes (P5 or P2) into an Image.

    The raster must contain exactly width * height samples; short data
    raises TruncatedError and trailing data raises FormatError. A P2 and
    a P5 encoding of the same raster parse to equal Images.
    """
    if not isinstance(data, (bytes, bytearray, memoryview)):
        raise TypeError("read_pgm expects bytes")
    data = bytes(data)
    magic = data[:2]
    if magic not in (b"P5", b"P2"):
        raise FormatError("not a PGM file (magic must be P5 or P2)")
    (w_tok, h_tok, max_tok), offset = _header_tokens(data[2:], 3)
    try:
        width, height, maxval = int(w_tok), int(h_tok), int(max_tok)
    except ValueError:
        raise FormatError("non-numeric value in PGM header") from None
    if width <= 0 or height <= 0:
        raise FormatError("image dimensions must be positive")
    if maxval > 255:
        raise UnsupportedError(f"maxval {maxval} exceeds 255")
    if maxval <= 0:
        raise FormatError("maxval must be positive")
    body = data[2 + offset:]

    if magic == b"P5":
        expected = width * height
        if len(body) < expected:
            raise TruncatedError(
                f"raster holds {len(body)} bytes, expected {expected}")
        if len(body) > expected:
            raise FormatError("trailing bytes after raster")
        pixels = np.frombuffer(body, dtype=np.uint8).reshape(height, width)
    else:
        values = []
        i, n = 0, len(body)
        while i < n:
            if body[i:i + 1].isspace():
                i += 1
            elif body[i] == ord("#"):
                while i < n and body[i] not in (ord("\n"), ord("\r")):
                    i += 1
            else:
                start = i
                while i < n and not body[i:i + 1].isspace() and body[i] != ord("#"):
                    i += 1
                values.append(body[start:i])
        if len(values) < width * height:
            raise TruncatedError(
                f"raster holds {len(values)} samples, expected {width * height}")
        if len(values) > width * height:
            raise FormatError("trailing samples after raster")
        try:
            samples = [int(v) for v in values]
        except ValueError:
            raise FormatError("non-numeric sample in P2 raster") from None
        pixels = np.array(samples, dtype=np.int64).reshape(height, width)

    if pixels.max(initial=0) > maxval:
        raise FormatError(f"sample exceeds declared maxval {maxval}")
    return Image(pixels.astype(np.uint8))


def write_pgm(img: Image, encoding: str = "P5") -> bytes:
    """Serialize an Image to PGM bytes; read_pgm inverts it exactly."""
    if encoding not in ("P5", "P2"):
        raise ValueError("encoding must be 'P5' or 'P2'")
    header = f"{encoding}\n{img.width} {img.height}\n{img.maxval}\n".encode("ascii")
    if encoding == "P5":
        return header + img.pixels.tobytes()
    lines = [" ".join(str(v) for v in row) for row in img.pixels]
    return header + ("\n".join(lines) + "\n").encode("ascii")


def load(path) -> Image:
    """Read a PGM file from disk."""
    with open(path, "rb") as fh:
        return read_pgm(fh.read())


def save(path, img: Image, encoding: str = "P5") -> None:
    """Write an Image to disk as PGM."""
    with open(path, "wb") as fh:
        fh.write(write_pgm(img, encoding))
