import struct

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from agbench.idx import (
    IMAGES_MAGIC,
    LABELS_MAGIC,
    IdxFormatError,
    parse_idx,
    quantize,
    write_idx_images,
    write_idx_labels,
)


def test_parse_images_header_and_shape():
    n, rows, cols = 7, 28, 28
    payload = bytes(range(256)) * (n * rows * cols // 256)
    payload += bytes(n * rows * cols - len(payload))
    data = struct.pack(">IIII", IMAGES_MAGIC, n, rows, cols) + payload
    images = parse_idx(data)
    assert images.shape == (n, rows, cols)
    assert images.min() >= 0.0 and images.max() <= 1.0


def test_parse_labels():
    labels = bytes([3, 1, 4, 1, 5])
    data = struct.pack(">II", LABELS_MAGIC, 5) + labels
    out = parse_idx(data)
    assert out.tolist() == [3, 1, 4, 1, 5]


def test_scaling_endpoints():
    data = struct.pack(">IIII", IMAGES_MAGIC, 1, 1, 2) + bytes([255, 0])
    images = parse_idx(data)
    assert images[0, 0, 0] == 1.0
    assert images[0, 0, 1] == 0.0


def test_bad_magic_rejected():
    with pytest.raises(IdxFormatError, match="magic"):
        parse_idx(struct.pack(">II", 0xDEADBEEF, 0))


def test_truncated_payload_rejected():
    data = struct.pack(">IIII", IMAGES_MAGIC, 2, 28, 28) + bytes(100)
    with pytest.raises(IdxFormatError, match="length"):
        parse_idx(data)


def test_write_empty_dataset():
    data = write_idx_images(np.zeros((0, 28, 28)))
    assert data == struct.pack(">IIII", IMAGES_MAGIC, 0, 28, 28)


def test_write_single_zero_image():
    data = write_idx_images(np.zeros((1, 28, 28)))
    assert len(data) == 16 + 784
    assert data[16:] == bytes(784)


def test_labels_round_trip():
    labels = np.array([0, 9, 5, 200])
    assert parse_idx(write_idx_labels(labels)).tolist() == labels.tolist()


def test_label_out_of_byte_range_rejected():
    with pytest.raises(ValueError):
        write_idx_labels(np.array([256]))


@settings(max_examples=25, deadline=None)
@given(
    n=st.integers(1, 5),
    side=st.integers(1, 16),
    seed=st.integers(0, 2**31 - 1),
)
def test_round_trip_reproduces_quantized_pixels(n, side, seed):
    rng = np.random.default_rng(seed)
    images = rng.random((n, side, side))
    parsed = parse_idx(write_idx_images(images))
    assert parsed.shape == images.shape
    # identity on the 0-255 grid: parsing yields quantize(images)/255 exactly
    np.testing.assert_array_equal(quantize(parsed), quantize(images))
    np.testing.assert_array_equal(parsed, quantize(images).astype(np.float64) / 255.0)
