"""Upsampling of low-resolution images before corruption.

Small inputs (28x28 MNIST digits) are interpolated up to 224x224 so the
grating corruption can use thin lines relative to the figure, which makes
the illusion stronger. Only upsampling is supported.

Kernels:
    nearest   index replication; at an integer scale factor k this is an
              exact block replication, out[y, x] = in[y // k, x // k]
    bilinear  corner-aligned sampling; source position for target index t
              is t * (src - 1) / (dst - 1), so the four corners map onto
              the source corners exactly and outputs stay inside the
              convex hull of the inputs
"""

from __future__ import annotations

import numpy as np

from .validation import check_image

__all__ = ["upsample"]

KERNELS = ("nearest", "bilinear")


def _axis_positions(src: int, dst: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Corner-aligned source positions split into (low index, high index, frac)."""
    if dst == 1 or src == 1:
        pos = np.zeros(dst)
    else:
        pos = np.arange(dst) * (src - 1) / (dst - 1)
    lo = np.floor(pos).astype(np.int64)
    lo = np.minimum(lo, src - 1)
    hi = np.minimum(lo + 1, src - 1)
    return lo, hi, pos - lo


def upsample(image, target_height: int, target_width: int, kernel: str = "bilinear") -> np.ndarray:
    """Resize an image up to (target_height, target_width)."""
    img = check_image(image)
    if kernel not in KERNELS:
        raise ValueError(f"unknown kernel {kernel!r}, expected one of {KERNELS}")
    sh, sw = img.shape
    th, tw = int(target_height), int(target_width)
    if th < sh or tw < sw:
        raise ValueError(
            f"upsample cannot downscale: source {sh}x{sw}, target {th}x{tw}"
        )

    if kernel == "nearest":
        rows = (np.arange(th) * sh) // th
        cols = (np.arange(tw) * sw) // tw
        return img[np.ix_(rows, cols)]

    ylo, yhi, fy = _axis_positions(sh, th)
    xlo, xhi, fx = _axis_positions(sw, tw)
    fy = fy[:, np.newaxis]
    fx = fx[np.newaxis, :]
    top = img[np.ix_(ylo, xlo)] * (1 - fx) + img[np.ix_(ylo, xhi)] * fx
    bottom = img[np.ix_(yhi, xlo)] * (1 - fx) + img[np.ix_(yhi, xhi)] * fx
    out = top * (1 - fy) + bottom * fy
    # interpolation is a convex combination; clip only float dust
    return np.clip(out, 0.0, 1.0)
