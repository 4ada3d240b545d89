"""Mapping of 1000 fine-grained classes onto 16 coarse categories.

The silhouette benchmark is scored at the level of 16 everyday object
categories; model predictions arrive as fine-grained (ImageNet-style)
class indices and are projected through a many-to-one table. Fine classes
absent from the table are "unmapped" and always score as incorrect.

File format: UTF-8 CSV with a `fine_index,category` header row.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

N_FINE_CLASSES = 1000

# Canonical 16-category vocabulary of the silhouette dataset, alphabetical.
CATEGORY_NAMES_16 = [
    "airplane", "bear", "bicycle", "bird", "boat", "bottle", "car", "cat",
    "chair", "clock", "dog", "elephant", "keyboard", "knife", "oven", "truck",
]


class ClassMapFormatError(ValueError):
    """Raised for malformed mapping tables."""


@dataclass
class ClassMap:
    """fine class index -> coarse category index (or unmapped)."""

    entries: dict[int, int] = field(default_factory=dict)
    category_names: list[str] = field(default_factory=lambda: list(CATEGORY_NAMES_16))

    def __post_init__(self):
        if len(self.category_names) != 16:
            raise ValueError(f"expected 16 category names, got {len(self.category_names)}")
        for fine, coarse in self.entries.items():
            if not (0 <= fine < N_FINE_CLASSES):
                raise ValueError(f"fine index {fine} out of range [0, {N_FINE_CLASSES})")
            if not (0 <= coarse < 16):
                raise ValueError(f"coarse index {coarse} out of range [0, 16)")

    def lookup(self, fine: int) -> int | None:
        """Coarse index for a fine class, or None when unmapped."""
        if not (0 <= fine < N_FINE_CLASSES):
            raise ValueError(f"fine index {fine} out of range [0, {N_FINE_CLASSES})")
        return self.entries.get(int(fine))


def load_class_map(text: str, category_names: list[str] | None = None) -> ClassMap:
    """Parse a `fine_index,category` CSV table into a ClassMap.

    Rejects duplicate fine indices and category names outside the
    16-name vocabulary. An empty table leaves every fine class unmapped.
    """
    names = list(category_names) if category_names is not None else list(CATEGORY_NAMES_16)
    if len(names) != 16:
        raise ValueError(f"expected 16 category names, got {len(names)}")
    index_of = {name: i for i, name in enumerate(names)}

    entries: dict[int, int] = {}
    reader = csv.reader(io.StringIO(text))
    for lineno, row in enumerate(reader, start=1):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != 2:
            raise ClassMapFormatError(f"line {lineno}: expected 2 columns, got {len(row)}")
        fine_text, category = row[0].strip(), row[1].strip()
        if lineno == 1 and fine_text == "fine_index":
            continue
        try:
            fine = int(fine_text)
        except ValueError as exc:
            raise ClassMapFormatError(f"line {lineno}: bad fine index {fine_text!r}") from exc
        if not (0 <= fine < N_FINE_CLASSES):
            raise ClassMapFormatError(f"line {lineno}: fine index {fine} out of range")
        if category not in index_of:
            raise ClassMapFormatError(f"line {lineno}: unknown category {category!r}")
        if fine in entries:
            raise ClassMapFormatError(f"line {lineno}: duplicate fine index {fine}")
        entries[fine] = index_of[category]
    return ClassMap(entries=entries, category_names=names)
