import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from agbench.interpolate import upsample

from .oracles import bilinear_point_oracle


def test_mnist_to_224():
    img = np.zeros((28, 28))
    out = upsample(img, 224, 224)
    assert out.shape == (224, 224)


def test_constant_stays_constant():
    out = upsample(np.full((5, 7), 0.3), 50, 70, kernel="bilinear")
    np.testing.assert_allclose(out, 0.3)
    out = upsample(np.full((5, 7), 0.3), 50, 70, kernel="nearest")
    np.testing.assert_array_equal(out, 0.3)


def test_nearest_integer_factor_is_block_replication(rng):
    img = rng.random((6, 4))
    k = 3
    out = upsample(img, 6 * k, 4 * k, kernel="nearest")
    for y in range(6 * k):
        for x in range(4 * k):
            assert out[y, x] == img[y // k, x // k]


def test_checkerboard_corner_alignment():
    cb = np.array([[1.0, 0.0], [0.0, 1.0]])
    out = upsample(cb, 4, 4, kernel="bilinear")
    # corner-aligned: target corners hit the source corners exactly
    assert out[0, 0] == 1.0 and out[3, 3] == 1.0
    assert out[0, 3] == 0.0 and out[3, 0] == 0.0


def test_bilinear_matches_pointwise_oracle(rng):
    img = rng.random((5, 6))
    th, tw = 13, 17
    out = upsample(img, th, tw, kernel="bilinear")
    for ty in range(th):
        for tx in range(tw):
            sy = ty * (5 - 1) / (th - 1)
            sx = tx * (6 - 1) / (tw - 1)
            assert out[ty, tx] == pytest.approx(bilinear_point_oracle(img, sy, sx), abs=1e-12)


def test_downscale_rejected():
    with pytest.raises(ValueError, match="downscale"):
        upsample(np.zeros((28, 28)), 14, 28)


def test_unknown_kernel_rejected():
    with pytest.raises(ValueError, match="kernel"):
        upsample(np.zeros((4, 4)), 8, 8, kernel="lanczos")


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**31 - 1), th=st.integers(6, 40), tw=st.integers(6, 40))
def test_property_bilinear_range_preserved(seed, th, tw):
    rng = np.random.default_rng(seed)
    img = rng.random((rng.integers(2, 7), rng.integers(2, 7)))
    th = max(th, img.shape[0])
    tw = max(tw, img.shape[1])
    out = upsample(img, th, tw, kernel="bilinear")
    assert out.min() >= img.min() - 1e-12
    assert out.max() <= img.max() + 1e-12


def test_monotone_rows_stay_monotone():
    img = np.tile(np.linspace(0, 1, 6), (4, 1))
    out = upsample(img, 9, 23, kernel="bilinear")
    assert np.all(np.diff(out, axis=1) >= -1e-12)
