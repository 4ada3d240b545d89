"""Loaders for source datasets on disk.

MNIST-shaped inputs are an IDX image/label file pair (optionally
gzipped); silhouette inputs are a directory of PNGs with the category
either as a subdirectory name or as the filename's alphabetic prefix
("airplane1.png" -> "airplane").
"""

from __future__ import annotations

import gzip
import re
from pathlib import Path

import numpy as np

from .datasets import LabeledDataset
from .idx import parse_idx
from .pngio import load_png_file


def _read_maybe_gzip(path: Path) -> bytes:
    data = path.read_bytes()
    if data[:2] == b"\x1f\x8b":
        return gzip.decompress(data)
    return data


def _find_idx_pair(directory: Path) -> tuple[Path, Path]:
    images = sorted(p for p in directory.iterdir() if "images" in p.name and "ubyte" in p.name)
    labels = sorted(p for p in directory.iterdir() if "labels" in p.name and "ubyte" in p.name)
    if not images or not labels:
        raise FileNotFoundError(
            f"no IDX pair (*images*ubyte*, *labels*ubyte*) found in {directory}"
        )
    return images[0], labels[0]


def load_mnist_dir(path) -> LabeledDataset:
    """Load an MNIST-format dataset from a directory or an images file."""
    p = Path(path)
    if p.is_dir():
        images_path, labels_path = _find_idx_pair(p)
    else:
        images_path = p
        labels_path = Path(str(p).replace("images", "labels"))
        if labels_path == images_path or not labels_path.exists():
            raise FileNotFoundError(f"cannot locate labels file next to {p}")
    images = parse_idx(_read_maybe_gzip(images_path))
    labels = parse_idx(_read_maybe_gzip(labels_path))
    if images.ndim != 3:
        raise ValueError(f"{images_path} does not contain IDX images")
    if labels.ndim != 1 or len(labels) != len(images):
        raise ValueError("image and label counts do not match")
    return LabeledDataset(
        images=images,
        labels=labels,
        class_names=[str(d) for d in range(10)],
        source=str(images_path),
    )


def _category_of(png: Path, has_subdirs: bool) -> str:
    if has_subdirs:
        return png.parent.name
    match = re.match(r"([a-zA-Z_\-]+)", png.stem)
    if not match:
        raise ValueError(f"cannot infer a category from filename {png.name!r}")
    return match.group(1).rstrip("_-").lower()


def load_silhouette_dir(path) -> LabeledDataset:
    """Load a silhouette directory of PNGs into a LabeledDataset."""
    root = Path(path)
    subdirs = [d for d in root.iterdir() if d.is_dir()]
    has_subdirs = bool(subdirs)
    pngs = sorted(root.rglob("*.png"))
    if not pngs:
        raise FileNotFoundError(f"no PNG files under {root}")

    categories = sorted({_category_of(p, has_subdirs) for p in pngs})
    index_of = {name: i for i, name in enumerate(categories)}
    images, labels = [], []
    for png in pngs:
        images.append(load_png_file(png))
        labels.append(index_of[_category_of(png, has_subdirs)])
    shapes = {img.shape for img in images}
    if len(shapes) != 1:
        raise ValueError(f"silhouette images must share one size, found {sorted(shapes)}")
    return LabeledDataset(
        images=np.stack(images),
        labels=np.asarray(labels),
        class_names=categories,
        source=str(root),
    )
