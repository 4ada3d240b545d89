"""Forward pass of the reference stem: conv -> BN -> ReLU -> maxpool.

Reference geometry is a 7x7 convolution at stride 2 with padding 3
followed by a 3x3/stride-2/padding-1 max pool, so a 3x224x224 input flows
3x224x224 -> 64x112x112 -> (BN, ReLU unchanged) -> 64x56x56.
"""

from __future__ import annotations

import numpy as np

from ..validation import check_image
from .ops import batch_norm, conv2d, max_pool, relu
from .weights import WeightBundle

STEM_TAPS = ("conv", "bn", "relu", "pool")

CONV_STRIDE = 2
CONV_PADDING = 3
POOL_KERNEL = 3
POOL_STRIDE = 2
POOL_PADDING = 1
BN_EPS = 1e-5


def as_stem_input(image, in_channels: int) -> np.ndarray:
    """Promote a grayscale image to the stem's (C, H, W) input layout."""
    arr = np.asarray(image, dtype=np.float64)
    if arr.ndim == 2:
        arr = check_image(arr)
        return np.repeat(arr[np.newaxis], in_channels, axis=0)
    if arr.ndim == 3:
        if arr.shape[0] != in_channels:
            raise ValueError(
                f"stem expects {in_channels} input channels, got {arr.shape[0]}"
            )
        return arr
    raise ValueError(f"stem input must be (H, W) or (C, H, W), got shape {arr.shape}")


def run_stem(image, bundle: WeightBundle, eps: float = BN_EPS) -> dict[str, np.ndarray]:
    """Run the four stem stages and return all taps by name."""
    x = as_stem_input(image, bundle.conv_weights.shape[1])
    conv = conv2d(x, bundle.conv_weights, stride=CONV_STRIDE, padding=CONV_PADDING)
    bn = batch_norm(conv, bundle.bn_gamma, bundle.bn_beta, bundle.bn_mean,
                    bundle.bn_var, eps=eps)
    act = relu(bn)
    pool = max_pool(act, kernel=POOL_KERNEL, stride=POOL_STRIDE, padding=POOL_PADDING)
    return {"conv": conv, "bn": bn, "relu": act, "pool": pool}
