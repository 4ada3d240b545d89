"""From-scratch forward ops for a convolutional stem.

Everything here is plain numpy on rank-3 (channels, height, width)
tensors, one stimulus at a time. conv2d and max_pool are written as an
im2col gather plus a single reduction so each output pixel is a fixed-
order sum, keeping results independent of any outer parallelism.
"""

from __future__ import annotations

import numpy as np

from ..validation import check_tensor

__all__ = ["conv2d", "batch_norm", "relu", "max_pool", "conv_output_size"]


def conv_output_size(size: int, kernel: int, stride: int, padding: int) -> int:
    out = (size + 2 * padding - kernel) // stride + 1
    if out <= 0:
        raise ValueError(
            f"kernel {kernel} with stride {stride}, padding {padding} "
            f"does not fit input size {size}"
        )
    return out


def _window_view(padded: np.ndarray, kh: int, kw: int, stride: int) -> np.ndarray:
    """(C, out_h, out_w, kh, kw) strided view over a padded (C, H, W) tensor."""
    c, h, w = padded.shape
    out_h = (h - kh) // stride + 1
    out_w = (w - kw) // stride + 1
    sc, sh, sw = padded.strides
    return np.lib.stride_tricks.as_strided(
        padded,
        shape=(c, out_h, out_w, kh, kw),
        strides=(sc, sh * stride, sw * stride, sh, sw),
        writeable=False,
    )


def conv2d(inputs, weights, stride: int = 1, padding: int = 0) -> np.ndarray:
    """Cross-correlate (C_in, H, W) with a (C_out, C_in, kh, kw) filter bank.

    Output spatial size is floor((in + 2*pad - k) / stride) + 1 per axis.
    """
    x = check_tensor(inputs, 3, "inputs")
    w = check_tensor(weights, 4, "weights")
    c_in, h, width = x.shape
    c_out, w_in, kh, kw = w.shape
    if w_in != c_in:
        raise ValueError(f"weights expect {w_in} input channels, input has {c_in}")
    if stride < 1 or padding < 0:
        raise ValueError("stride must be >= 1 and padding >= 0")
    out_h = conv_output_size(h, kh, stride, padding)
    out_w = conv_output_size(width, kw, stride, padding)

    padded = np.pad(x, ((0, 0), (padding, padding), (padding, padding)))
    windows = _window_view(padded, kh, kw, stride)
    # (out_h*out_w, C_in*kh*kw) @ (C_in*kh*kw, C_out)
    cols = windows.transpose(1, 2, 0, 3, 4).reshape(out_h * out_w, c_in * kh * kw)
    flat = w.reshape(c_out, c_in * kh * kw).T
    out = cols @ flat
    return np.ascontiguousarray(out.reshape(out_h, out_w, c_out).transpose(2, 0, 1))


def batch_norm(inputs, gamma, beta, mean, var, eps: float = 1e-5) -> np.ndarray:
    """Inference-form batch normalization, per channel:

        y = gamma * (x - mean) / sqrt(var + eps) + beta
    """
    x = check_tensor(inputs, 3, "inputs")
    gamma = check_tensor(gamma, 1, "gamma")
    beta = check_tensor(beta, 1, "beta")
    mean = check_tensor(mean, 1, "mean")
    var = check_tensor(var, 1, "var")
    c = x.shape[0]
    for name, v in (("gamma", gamma), ("beta", beta), ("mean", mean), ("var", var)):
        if v.shape != (c,):
            raise ValueError(f"{name} must have shape ({c},), got {v.shape}")
    if np.any(var < 0):
        raise ValueError("variance entries must be >= 0")
    scale = gamma / np.sqrt(var + eps)
    return x * scale[:, None, None] + (beta - mean * scale)[:, None, None]


def relu(inputs) -> np.ndarray:
    return np.maximum(check_tensor(inputs, 3, "inputs"), 0.0)


def max_pool(inputs, kernel: int = 3, stride: int = 2, padding: int = 1) -> np.ndarray:
    """Window maximum over (C, H, W); padded cells count as -inf."""
    x = check_tensor(inputs, 3, "inputs")
    if kernel < 1 or stride < 1 or padding < 0:
        raise ValueError("kernel and stride must be >= 1, padding >= 0")
    _, h, w = x.shape
    conv_output_size(h, kernel, stride, padding)
    conv_output_size(w, kernel, stride, padding)
    padded = np.pad(x, ((0, 0), (padding, padding), (padding, padding)),
                    constant_values=-np.inf)
    windows = _window_view(padded, kernel, kernel, stride)
    return windows.max(axis=(3, 4))
