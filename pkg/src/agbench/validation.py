"""Input validation helpers shared across the toolkit.

Images are plain 2-D numpy arrays of luminance values in [0, 1]; batches
stack them along axis 0. These helpers normalize dtypes and fail loudly on
anything that violates those conventions.
"""

from __future__ import annotations

import numpy as np

DIRECTIONS = ("horizontal", "vertical", "diag_ul", "diag_ur")
POLARITIES = ("lines_white_on_black", "lines_black_on_white")


def check_image(image, name: str = "image") -> np.ndarray:
    """Validate a single grayscale image and return it as float64.

    Requires a 2-D array with finite values in [0, 1].
    """
    arr = np.asarray(image, dtype=np.float64)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2-D, got shape {arr.shape}")
    if arr.size == 0:
        raise ValueError(f"{name} must be non-empty")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite values")
    if arr.min() < 0.0 or arr.max() > 1.0:
        raise ValueError(
            f"{name} values must lie in [0, 1], got range "
            f"[{arr.min():.4g}, {arr.max():.4g}]"
        )
    return arr


def check_image_batch(X, name: str = "X") -> np.ndarray:
    """Validate a batch of grayscale images shaped (n, height, width).

    A single 2-D image is promoted to a batch of one.
    """
    arr = np.asarray(X, dtype=np.float64)
    if arr.ndim == 2:
        arr = arr[np.newaxis]
    if arr.ndim != 3:
        raise ValueError(f"{name} must be (n, height, width), got shape {arr.shape}")
    if arr.size == 0:
        raise ValueError(f"{name} must be non-empty")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite values")
    if arr.min() < 0.0 or arr.max() > 1.0:
        raise ValueError(f"{name} values must lie in [0, 1]")
    return arr


def check_tensor(t, rank: int, name: str = "tensor") -> np.ndarray:
    """Validate a numeric tensor of the given rank with finite values."""
    arr = np.asarray(t, dtype=np.float64)
    if arr.ndim != rank:
        raise ValueError(f"{name} must have rank {rank}, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite values")
    return arr


def check_direction(direction: str) -> str:
    if direction not in DIRECTIONS:
        raise ValueError(f"unknown direction {direction!r}, expected one of {DIRECTIONS}")
    return direction


def check_polarity(polarity: str) -> str:
    if polarity not in POLARITIES:
        raise ValueError(f"unknown polarity {polarity!r}, expected one of {POLARITIES}")
    return polarity


def check_interval(interval: int) -> int:
    """Grating intervals must be even and at least 2.

    Odd intervals are rejected outright: the half-cycle shift between the
    figure and background gratings is interval/2 pixels, which does not
    exist on the pixel grid for odd periods.
    """
    if int(interval) != interval:
        raise ValueError(f"interval must be an integer, got {interval!r}")
    interval = int(interval)
    if interval < 2:
        raise ValueError(f"interval must be >= 2, got {interval}")
    if interval % 2 != 0:
        raise ValueError(f"interval must be even, got {interval}")
    return interval


def check_threshold(threshold: float) -> float:
    threshold = float(threshold)
    if not (0.0 < threshold < 1.0):
        raise ValueError(f"threshold must lie in (0, 1), got {threshold}")
    return threshold
