"""IDX (MNIST distribution format) reader and writer.

Layout is big-endian throughout: a 4-byte magic number whose low bytes
encode element type (0x08 = unsigned byte) and rank, one u32 per
dimension, then the raw u8 payload.

    0x00000803  images, dims (count, rows, cols)
    0x00000801  labels, dims (count,)

Pixels cross this boundary as bytes 0-255 and live inside the toolkit as
floats in [0, 1]; writing quantizes with round(v * 255).
"""

from __future__ import annotations

import struct

import numpy as np

from .validation import check_image_batch

IMAGES_MAGIC = 0x00000803
LABELS_MAGIC = 0x00000801


class IdxFormatError(ValueError):
    """Raised for malformed IDX data (bad magic, truncated payload)."""


def quantize(images: np.ndarray) -> np.ndarray:
    """[0,1] floats to u8 bytes, round-half-away via rint on v*255."""
    return np.rint(np.asarray(images, dtype=np.float64) * 255.0).astype(np.uint8)


def parse_idx(data: bytes) -> np.ndarray:
    """Parse IDX bytes into images (n, rows, cols) in [0,1] or labels (n,).

    Which one is returned follows the magic number.
    """
    if len(data) < 4:
        raise IdxFormatError("IDX data shorter than magic number")
    (magic,) = struct.unpack(">I", data[:4])
    if magic == IMAGES_MAGIC:
        ndim = 3
    elif magic == LABELS_MAGIC:
        ndim = 1
    else:
        raise IdxFormatError(f"bad IDX magic 0x{magic:08x}")

    header_len = 4 + 4 * ndim
    if len(data) < header_len:
        raise IdxFormatError("IDX header truncated")
    dims = struct.unpack(f">{ndim}I", data[4:header_len])
    expected = int(np.prod(dims, dtype=np.int64)) if dims else 0
    payload = data[header_len:]
    if len(payload) != expected:
        raise IdxFormatError(
            f"IDX payload length {len(payload)} does not match dims {dims} "
            f"(expected {expected})"
        )

    raw = np.frombuffer(payload, dtype=np.uint8)
    if magic == LABELS_MAGIC:
        return raw.astype(np.int64)
    return raw.reshape(dims).astype(np.float64) / 255.0


def write_idx_images(images) -> bytes:
    """Serialize (n, rows, cols) float images to IDX bytes."""
    arr = np.asarray(images, dtype=np.float64)
    if arr.ndim != 3:
        raise ValueError(f"images must be (n, rows, cols), got shape {arr.shape}")
    if arr.size:
        check_image_batch(arr, "images")
    n, rows, cols = arr.shape
    header = struct.pack(">IIII", IMAGES_MAGIC, n, rows, cols)
    return header + quantize(arr).tobytes()


def write_idx_labels(labels) -> bytes:
    """Serialize (n,) labels to IDX bytes; labels must fit in a byte."""
    arr = np.asarray(labels, dtype=np.int64)
    if arr.ndim != 1:
        raise ValueError(f"labels must be (n,), got shape {arr.shape}")
    if arr.size and (arr.min() < 0 or arr.max() > 255):
        raise ValueError("labels must lie in [0, 255] for IDX u8 payload")
    header = struct.pack(">II", LABELS_MAGIC, len(arr))
    return header + arr.astype(np.uint8).tobytes()
