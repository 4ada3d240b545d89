"""End-to-end benchmark generation.

One run corrupts a source dataset under every (direction, interval) pair
of a condition grid and writes one output dataset per pair, plus a root
manifest recording parameters and per-stimulus content hashes. Default
grids:

    mnist        horizontal x intervals 2,4,6,8          (4 sets)
    mnist_hires  all 4 directions x intervals 4,8,16,32  (16 sets),
                 inputs interpolated to 224x224 first
    silhouettes  all 4 directions x intervals 4-14 step 2 (24 sets)

Silhouettes are dark figures on light ground, so their grid flips the
figure/background roles and the line polarity relative to MNIST.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .datasets import LabeledDataset
from .gratings import GratingSpec, apply_abutting_grating
from .idx import quantize, write_idx_images, write_idx_labels
from .interpolate import upsample
from .manifest import BenchmarkManifest, ConditionRecord, ManifestItem, sha256_hex
from .pngio import write_png_file
from .validation import check_direction, check_interval

DIRECTION_CODES = {
    "horizontal": "h",
    "vertical": "v",
    "diag_ul": "ul",
    "diag_ur": "ur",
}
CODE_DIRECTIONS = {v: k for k, v in DIRECTION_CODES.items()}
ALL_DIRECTIONS = tuple(DIRECTION_CODES)


@dataclass(frozen=True)
class ConditionGrid:
    """The (direction x interval) conditions of one benchmark."""

    dataset: str
    directions: tuple[str, ...]
    intervals: tuple[int, ...]

    def __post_init__(self):
        for d in self.directions:
            check_direction(d)
        for i in self.intervals:
            check_interval(i)

    def pairs(self) -> list[tuple[str, int]]:
        return [(d, i) for d in self.directions for i in self.intervals]

    @staticmethod
    def mnist_default() -> "ConditionGrid":
        return ConditionGrid("mnist", ("horizontal",), (2, 4, 6, 8))

    @staticmethod
    def mnist_hires_default() -> "ConditionGrid":
        return ConditionGrid("mnist_hires", ALL_DIRECTIONS, (4, 8, 16, 32))

    @staticmethod
    def silhouettes_default() -> "ConditionGrid":
        return ConditionGrid("silhouettes", ALL_DIRECTIONS, (4, 6, 8, 10, 12, 14))

    @staticmethod
    def default_for(dataset: str) -> "ConditionGrid":
        try:
            return {
                "mnist": ConditionGrid.mnist_default,
                "mnist_hires": ConditionGrid.mnist_hires_default,
                "silhouettes": ConditionGrid.silhouettes_default,
            }[dataset]()
        except KeyError:
            raise ValueError(f"no default grid for dataset {dataset!r}")


@dataclass
class GeneratorConfig:
    """Per-dataset corruption knobs; dataset defaults via `for_dataset`."""

    threshold: float = 0.5
    figure_phase: int = 0
    polarity: str = "lines_white_on_black"
    figure_is_dark: bool = False
    interpolate_to: tuple[int, int] | None = None  # (height, width)
    kernel: str = "bilinear"
    write_idx: bool = False
    write_png: bool = True

    @staticmethod
    def for_dataset(dataset: str) -> "GeneratorConfig":
        if dataset == "mnist_hires":
            return GeneratorConfig(interpolate_to=(224, 224))
        if dataset == "silhouettes":
            return GeneratorConfig(polarity="lines_black_on_white", figure_is_dark=True)
        return GeneratorConfig()

    def params_dict(self) -> dict:
        return {
            "threshold": self.threshold,
            "figure_phase": self.figure_phase,
            "polarity": self.polarity,
            "figure_is_dark": self.figure_is_dark,
            "interpolation": (
                None if self.interpolate_to is None
                else {"kernel": self.kernel,
                      "height": self.interpolate_to[0],
                      "width": self.interpolate_to[1]}
            ),
        }


def generate(dataset: LabeledDataset, grid: ConditionGrid, out_dir,
             config: GeneratorConfig | None = None, seed: int = 0,
             source_indices=None) -> BenchmarkManifest:
    """Corrupt `dataset` under every grid condition and write it to disk.

    Returns the manifest (also saved to out_dir/manifest.json). With an
    empty grid a valid empty manifest is still produced.
    """
    if len(dataset) == 0:
        raise ValueError("cannot generate a benchmark from an empty dataset")
    config = config or GeneratorConfig.for_dataset(grid.dataset)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    images = dataset.images
    if config.interpolate_to is not None:
        th, tw = config.interpolate_to
        images = np.stack([upsample(img, th, tw, kernel=config.kernel) for img in images])

    conditions = []
    for direction, interval in grid.pairs():
        spec = GratingSpec(
            direction=direction,
            interval=interval,
            threshold=config.threshold,
            figure_phase=config.figure_phase,
            polarity=config.polarity,
        )
        cond_name = f"{DIRECTION_CODES[direction]}_{interval}"
        cond_dir = out / cond_name
        cond_dir.mkdir(parents=True, exist_ok=True)

        corrupted = np.stack([
            apply_abutting_grating(img, spec, figure_is_dark=config.figure_is_dark)
            for img in images
        ])

        items = []
        for index, (stim, label) in enumerate(zip(corrupted, dataset.labels)):
            stem = f"{index:04d}_{label}"
            item_id = f"{cond_name}/{stem}"
            if config.write_png:
                data = write_png_file(cond_dir / f"{stem}.png", stim)
                items.append(ManifestItem(
                    id=item_id, index=index, label=int(label),
                    sha256=sha256_hex(data), file=f"{cond_name}/{stem}.png",
                ))
            else:
                items.append(ManifestItem(
                    id=item_id, index=index, label=int(label),
                    sha256=sha256_hex(quantize(stim).tobytes()),
                ))

        record = ConditionRecord(
            direction=direction, interval=interval, dir=cond_name,
            format="png" if config.write_png else "idx", items=items,
        )
        if config.write_idx:
            images_bytes = write_idx_images(corrupted)
            labels_bytes = write_idx_labels(dataset.labels)
            images_path = cond_dir / "images-idx3-ubyte"
            labels_path = cond_dir / "labels-idx1-ubyte"
            images_path.write_bytes(images_bytes)
            labels_path.write_bytes(labels_bytes)
            record.images_idx = f"{cond_name}/images-idx3-ubyte"
            record.labels_idx = f"{cond_name}/labels-idx1-ubyte"
            record.images_sha256 = sha256_hex(images_bytes)
            record.labels_sha256 = sha256_hex(labels_bytes)
        conditions.append(record)

    manifest = BenchmarkManifest(
        dataset=grid.dataset,
        source=dataset.source,
        seed=seed,
        params=config.params_dict(),
        class_names=list(dataset.class_names),
        conditions=conditions,
        source_indices=None if source_indices is None else [int(i) for i in source_indices],
    )
    manifest.save(out)
    return manifest


def sample_human_subset(dataset: LabeledDataset, seed: int, per_class: int = 10,
                        exclude=None) -> tuple[LabeledDataset, list[int]]:
    """Draw the human-study subset: per_class items from every class.

    Deterministic in `seed`; the returned order is shuffled. `exclude`
    bars source indices already used by another draw, so two draws can
    be made disjoint. Raises if any class has too few eligible items.
    """
    rng = np.random.default_rng(seed)
    excluded = set(int(i) for i in (exclude or ()))
    chosen: list[int] = []
    for cls in range(len(dataset.class_names)):
        eligible = [i for i in np.flatnonzero(dataset.labels == cls) if i not in excluded]
        if len(eligible) < per_class:
            raise ValueError(
                f"class {cls} has only {len(eligible)} eligible items, "
                f"need {per_class}"
            )
        pick = rng.choice(len(eligible), size=per_class, replace=False)
        chosen.extend(int(eligible[i]) for i in pick)
    order = rng.permutation(len(chosen))
    chosen = [chosen[i] for i in order]
    subset = dataset.subset(
        chosen,
        source=f"{dataset.source} [human subset seed={seed} per_class={per_class}]",
    )
    return subset, chosen
