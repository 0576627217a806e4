"""Self-authenticating fragile image watermarking on 4x4 Daubechies blocks.

A grayscale cover is transformed tile by tile; each tile's own
frequency-domain signature is written into selected coefficient LSBs,
and verification later re-extracts the signature and compares it with a
freshly computed one, localizing tampering to 4x4 blocks.
"""

from .codec import (
    AuthReport,
    EmbedConfig,
    MaskAuthResult,
    authenticate_image,
    authenticate_pixels,
    embed_image,
    embed_in_coefficient,
    embed_pixels,
    extract_from_coefficient,
    payload_capacity,
    wrapped_distance,
)
from .metrics import QualityMetrics, image_fidelity, mse, psnr, quality
from .pgm import (
    FormatError,
    Image,
    TruncatedError,
    UnsupportedError,
    load,
    read_pgm,
    save,
    write_pgm,
)
from .signature import (
    SET1,
    SET1_SET2,
    byte_wrap,
    distribute_bits,
    hash_position,
    set1_byte,
    set2_byte,
    sites_for_mask,
)
from .transform import (
    DAUB4,
    FilterBank,
    NumericError,
    daubechies4,
    fdt_block,
    fdt_image,
    idt_block,
    idt_image,
)

__version__ = "0.1.0"

__all__ = [
    "AuthReport", "EmbedConfig", "MaskAuthResult", "QualityMetrics",
    "FilterBank", "Image", "FormatError", "TruncatedError",
    "UnsupportedError", "NumericError", "SET1", "SET1_SET2", "DAUB4",
    "authenticate_image", "authenticate_pixels", "byte_wrap",
    "daubechies4", "distribute_bits", "embed_image",
    "embed_in_coefficient", "embed_pixels", "extract_from_coefficient",
    "fdt_block", "fdt_image", "hash_position", "idt_block", "idt_image",
    "image_fidelity", "load", "mse", "payload_capacity", "psnr",
    "quality", "read_pgm", "save", "set1_byte", "set2_byte",
    "sites_for_mask", "wrapped_distance", "write_pgm",
]
