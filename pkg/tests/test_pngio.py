import io

import numpy as np
import pytest
from PIL import Image

from agbench.idx import quantize
from agbench.pngio import PngFormatError, load_png_gray, write_png_gray


def _encode(mode, array):
    buf = io.BytesIO()
    Image.fromarray(array, mode=mode).save(buf, format="PNG")
    return buf.getvalue()


def test_all_white_2x2():
    data = _encode("L", np.full((2, 2), 255, dtype=np.uint8))
    img = load_png_gray(data)
    np.testing.assert_array_equal(img, np.ones((2, 2)))


def test_rgb_black_maps_to_zero():
    rgb = np.zeros((3, 3, 3), dtype=np.uint8)
    rgb[1, 1] = (255, 255, 255)
    img = load_png_gray(_encode("RGB", rgb))
    assert img[0, 0] == 0.0
    assert img[1, 1] == 1.0


def test_rgb_channel_average():
    rgb = np.zeros((1, 1, 3), dtype=np.uint8)
    rgb[0, 0] = (30, 60, 90)
    img = load_png_gray(_encode("RGB", rgb))
    assert img[0, 0] == pytest.approx(60 / 255)


def test_undecodable_bytes_rejected():
    with pytest.raises(PngFormatError):
        load_png_gray(b"definitely not a png")


def test_round_trip_lossless_on_grid(rng):
    img = quantize(rng.random((13, 9))).astype(np.float64) / 255.0
    loaded = load_png_gray(write_png_gray(img))
    np.testing.assert_array_equal(loaded, img)


def test_round_trip_of_generated_stimulus():
    from agbench import GratingSpec, apply_abutting_grating

    stim = apply_abutting_grating(np.zeros((28, 28)), GratingSpec(interval=4))
    loaded = load_png_gray(write_png_gray(stim))
    np.testing.assert_array_equal(loaded, stim)


def test_output_is_8bit_grayscale_noninterlaced():
    data = write_png_gray(np.linspace(0, 1, 16).reshape(4, 4))
    img = Image.open(io.BytesIO(data))
    assert img.mode == "L"
    assert img.info.get("interlace", 0) == 0
