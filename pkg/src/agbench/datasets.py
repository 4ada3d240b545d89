"""Labeled image collections used throughout the toolkit."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .validation import check_image_batch


@dataclass
class LabeledDataset:
    """Ordered images with class labels, a class-name table and provenance.

    images: (n, height, width) float array, values in [0, 1]
    labels: (n,) integer array, each label < len(class_names)
    """

    images: np.ndarray
    labels: np.ndarray
    class_names: list[str] = field(default_factory=list)
    source: str = ""

    def __post_init__(self):
        self.images = np.asarray(self.images, dtype=np.float64)
        if self.images.ndim != 3:
            raise ValueError(f"images must be (n, height, width), got {self.images.shape}")
        if self.images.size:
            self.images = check_image_batch(self.images, "images")
        self.labels = np.asarray(self.labels, dtype=np.int64)
        if self.labels.ndim != 1 or len(self.labels) != len(self.images):
            raise ValueError(
                f"labels must be (n,) matching images, got {self.labels.shape} "
                f"for {len(self.images)} images"
            )
        if len(self.labels) and (self.labels.min() < 0 or self.labels.max() >= len(self.class_names)):
            raise ValueError("every label must index into class_names")

    def __len__(self) -> int:
        return len(self.images)

    @property
    def image_shape(self) -> tuple[int, int]:
        return self.images.shape[1], self.images.shape[2]

    def subset(self, indices, source: str | None = None) -> "LabeledDataset":
        idx = np.asarray(indices, dtype=np.int64)
        return LabeledDataset(
            images=self.images[idx],
            labels=self.labels[idx],
            class_names=list(self.class_names),
            source=source if source is not None else self.source,
        )

    def class_counts(self) -> np.ndarray:
        return np.bincount(self.labels, minlength=len(self.class_names))
