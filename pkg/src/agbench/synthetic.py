"""Synthetic stand-in datasets in the real input formats.

The toolkit's own test data: digit images built from a 5x7 glyph font
(MNIST-shaped, white-on-black, light blur so thresholding is exercised on
soft edges) and 16 procedural silhouette categories (black-on-white
filled shapes). These are NOT the published datasets; they exist so the
full pipeline can be run and tested on a machine without the real files.
"""

from __future__ import annotations

import numpy as np

from .classmap import CATEGORY_NAMES_16
from .datasets import LabeledDataset

# 5x7 digit glyphs, row strings, '#' = ink
_DIGIT_GLYPHS = {
    0: ("#####", "#...#", "#...#", "#...#", "#...#", "#...#", "#####"),
    1: ("..#..", ".##..", "..#..", "..#..", "..#..", "..#..", ".###."),
    2: ("#####", "....#", "....#", "#####", "#....", "#....", "#####"),
    3: ("#####", "....#", "....#", ".####", "....#", "....#", "#####"),
    4: ("#...#", "#...#", "#...#", "#####", "....#", "....#", "....#"),
    5: ("#####", "#....", "#....", "#####", "....#", "....#", "#####"),
    6: ("#####", "#....", "#....", "#####", "#...#", "#...#", "#####"),
    7: ("#####", "....#", "...#.", "..#..", "..#..", ".#...", ".#..."),
    8: ("#####", "#...#", "#...#", "#####", "#...#", "#...#", "#####"),
    9: ("#####", "#...#", "#...#", "#####", "....#", "....#", "#####"),
}


def _box_blur(img: np.ndarray) -> np.ndarray:
    """3x3 box blur with edge clamping; softens glyph edges."""
    padded = np.pad(img, 1, mode="edge")
    out = np.zeros_like(img)
    for dy in range(3):
        for dx in range(3):
            out += padded[dy:dy + img.shape[0], dx:dx + img.shape[1]]
    return out / 9.0


def _render_digit(digit: int, rng: np.random.Generator, size: int = 28) -> np.ndarray:
    glyph = _DIGIT_GLYPHS[digit]
    scale = 3
    gh, gw = len(glyph) * scale, len(glyph[0]) * scale
    canvas = np.zeros((size, size))
    oy = rng.integers(1, size - gh - 1)
    ox = rng.integers(2, size - gw - 2)
    ink = rng.uniform(0.75, 1.0)
    for r, row in enumerate(glyph):
        for c, ch in enumerate(row):
            if ch == "#":
                canvas[oy + r * scale:oy + (r + 1) * scale,
                       ox + c * scale:ox + (c + 1) * scale] = ink
    return np.clip(_box_blur(canvas), 0.0, 1.0)


def synthetic_mnist(n: int, seed: int = 0, size: int = 28) -> LabeledDataset:
    """n digit images cycling through classes 0-9, shuffled by seed."""
    rng = np.random.default_rng(seed)
    labels = np.arange(n) % 10
    rng.shuffle(labels)
    images = np.stack([_render_digit(int(d), rng, size) for d in labels])
    return LabeledDataset(
        images=images,
        labels=labels,
        class_names=[str(d) for d in range(10)],
        source=f"synthetic-mnist(n={n}, seed={seed})",
    )


def _shape_mask(category: int, size: int, rng: np.random.Generator) -> np.ndarray:
    """Filled mask for one of 16 parametric shape families."""
    yy, xx = np.mgrid[0:size, 0:size]
    cy = size / 2 + rng.uniform(-0.06, 0.06) * size
    cx = size / 2 + rng.uniform(-0.06, 0.06) * size
    r = size * rng.uniform(0.24, 0.36)
    u = (xx - cx) / r
    v = (yy - cy) / r

    kind = category % 16
    if kind == 0:    # airplane: wide bar + vertical fin
        m = (np.abs(v) < 0.25) & (np.abs(u) < 1.0)
        m |= (np.abs(u) < 0.18) & (v > -1.0) & (v < 0.45)
    elif kind == 1:  # bear: disc + two ear discs
        m = u**2 + v**2 < 1.0
        m |= (u + 0.6)**2 + (v + 0.85)**2 < 0.12
        m |= (u - 0.6)**2 + (v + 0.85)**2 < 0.12
    elif kind == 2:  # bicycle: two rings + bar
        m = np.abs((u + 0.55)**2 + v**2 - 0.25) < 0.12
        m |= np.abs((u - 0.55)**2 + v**2 - 0.25) < 0.12
        m |= (np.abs(v + 0.3) < 0.1) & (np.abs(u) < 0.6)
    elif kind == 3:  # bird: ellipse + beak triangle
        m = (u / 1.0)**2 + (v / 0.55)**2 < 1.0
        m |= (u > 0.8) & (u < 1.35) & (np.abs(v) < (1.35 - u) * 0.5)
    elif kind == 4:  # boat: hull trapezoid + mast
        m = (v > 0.1) & (v < 0.6) & (np.abs(u) < 1.0 - 0.5 * (v - 0.1))
        m |= (np.abs(u) < 0.08) & (v > -0.9) & (v <= 0.1)
    elif kind == 5:  # bottle: narrow neck + body
        m = (np.abs(u) < 0.22) & (v > -1.1) & (v < -0.35)
        m |= (np.abs(u) < 0.5) & (v >= -0.35) & (v < 1.0)
    elif kind == 6:  # car: body + cabin
        m = (np.abs(v - 0.25) < 0.3) & (np.abs(u) < 1.0)
        m |= (np.abs(v + 0.25) < 0.22) & (np.abs(u) < 0.55)
    elif kind == 7:  # cat: disc + triangular ears
        m = u**2 + v**2 < 0.9
        m |= (v < -0.4) & (v > -1.25) & (np.abs(u + 0.55) < (v + 1.25) * 0.4)
        m |= (v < -0.4) & (v > -1.25) & (np.abs(u - 0.55) < (v + 1.25) * 0.4)
    elif kind == 8:  # chair: L profile
        m = (np.abs(u + 0.55) < 0.18) & (np.abs(v) < 1.0)
        m |= (v > 0.15) & (v < 0.5) & (u > -0.73) & (u < 0.7)
        m |= (np.abs(u - 0.55) < 0.15) & (v > 0.15) & (v < 1.0)
    elif kind == 9:  # clock: ring + hands
        m = np.abs(u**2 + v**2 - 0.81) < 0.33
        m |= (np.abs(u) < 0.09) & (v > -0.7) & (v < 0.05)
        m |= (np.abs(v) < 0.09) & (u > -0.05) & (u < 0.5)
    elif kind == 10:  # dog: body ellipse + snout box
        m = (u / 1.0)**2 + (v / 0.6)**2 < 1.0
        m |= (u > 0.7) & (u < 1.3) & (np.abs(v + 0.15) < 0.22)
    elif kind == 11:  # elephant: big disc + trunk column
        m = u**2 + (v * 0.9)**2 < 1.0
        m |= (np.abs(u - 0.75) < 0.16) & (v > 0.0) & (v < 1.15)
    elif kind == 12:  # keyboard: flat slab
        m = (np.abs(v) < 0.32) & (np.abs(u) < 1.25)
    elif kind == 13:  # knife: blade wedge + handle
        m = (u > -1.1) & (u < 0.35) & (np.abs(v) < (u + 1.1) * 0.28)
        m |= (u >= 0.35) & (u < 1.1) & (np.abs(v) < 0.14)
    elif kind == 14:  # oven: square + door slot
        m = (np.abs(u) < 0.95) & (np.abs(v) < 0.95)
        m &= ~((np.abs(u) < 0.55) & (np.abs(v - 0.25) < 0.3))
    else:            # truck: cab + cargo box
        m = (u > -1.2) & (u < 0.0) & (v > -0.2) & (v < 0.55)
        m |= (u >= 0.0) & (u < 1.0) & (v > -0.75) & (v < 0.55)
    return m


def synthetic_silhouettes(per_class: int = 10, seed: int = 0, size: int = 224) -> LabeledDataset:
    """16 categories x per_class black-on-white silhouettes."""
    rng = np.random.default_rng(seed)
    images, labels = [], []
    for category in range(16):
        for _ in range(per_class):
            mask = _shape_mask(category, size, rng)
            images.append(np.where(mask, 0.0, 1.0))
            labels.append(category)
    order = rng.permutation(len(images))
    return LabeledDataset(
        images=np.stack(images)[order],
        labels=np.asarray(labels)[order],
        class_names=list(CATEGORY_NAMES_16),
        source=f"synthetic-silhouettes(per_class={per_class}, seed={seed}, size={size})",
    )


def synthetic_class_map(seed: int = 0, fine_per_category: int = 40) -> "ClassMap":
    """A plausible 1000->16 table for tests: disjoint fine blocks per category."""
    from .classmap import ClassMap

    rng = np.random.default_rng(seed)
    fine = rng.permutation(1000)[:16 * fine_per_category]
    entries = {int(f): i // fine_per_category for i, f in enumerate(fine)}
    return ClassMap(entries=entries)
