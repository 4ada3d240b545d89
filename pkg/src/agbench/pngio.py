"""Grayscale PNG encode/decode on top of Pillow.

Output is always 8-bit grayscale, non-interlaced. Loading accepts
single-channel and RGB(A) images; color is collapsed by the unweighted
channel mean, which is exact for the black/white silhouettes this
pipeline ingests. Values on the 1/255 grid round-trip losslessly.
"""

from __future__ import annotations

import io
from pathlib import Path

import numpy as np
from PIL import Image, UnidentifiedImageError

from .idx import quantize
from .validation import check_image


class PngFormatError(ValueError):
    """Raised when bytes do not decode as a PNG image."""


def load_png_gray(data: bytes) -> np.ndarray:
    """Decode PNG bytes into a 2-D float image in [0, 1]."""
    try:
        img = Image.open(io.BytesIO(data))
        img.load()
    except (UnidentifiedImageError, OSError, SyntaxError) as exc:
        raise PngFormatError(f"cannot decode PNG data: {exc}") from exc

    if img.mode == "L":
        arr = np.asarray(img, dtype=np.float64)
    elif img.mode in ("I", "I;16", "LA", "P", "RGB", "RGBA"):
        rgb = np.asarray(img.convert("RGB"), dtype=np.float64)
        arr = rgb.mean(axis=2)
    else:
        raise PngFormatError(f"unsupported PNG mode {img.mode!r}")
    return arr / 255.0


def write_png_gray(image) -> bytes:
    """Encode a [0,1] float image as 8-bit grayscale PNG bytes."""
    img = check_image(image)
    buf = io.BytesIO()
    Image.fromarray(quantize(img), mode="L").save(buf, format="PNG")
    return buf.getvalue()


def load_png_file(path) -> np.ndarray:
    return load_png_gray(Path(path).read_bytes())


def write_png_file(path, image) -> bytes:
    """Write a PNG file and return the encoded bytes (for hashing)."""
    data = write_png_gray(image)
    Path(path).write_bytes(data)
    return data
