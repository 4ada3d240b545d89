"""Abutting-grating illusion benchmark toolkit.

Converts silhouette-style image datasets (MNIST-shaped digits,
high-resolution digits, object silhouettes) into abutting-grating
illusory-contour benchmarks, scores external model predictions against
them, probes early convolutional layers over the stimuli, and serves a
forced-choice human classification study.
"""

__version__ = "0.1.0"

from .benchgen import ConditionGrid, GeneratorConfig, generate, sample_human_subset
from .classmap import CATEGORY_NAMES_16, ClassMap, load_class_map
from .datasets import LabeledDataset
from .gratings import (
    GratingSpec,
    MaskPair,
    apply_abutting_grating,
    binarize,
    grating_coordinate,
    render_grating,
)
from .idx import parse_idx, write_idx_images, write_idx_labels
from .interpolate import upsample
from .manifest import BenchmarkManifest, load_manifest
from .pngio import load_png_gray, write_png_gray
from .scoring import (
    ConditionResult,
    PredictionSet,
    map_to_16,
    outliers,
    read_predictions,
    score,
    summarize,
)
from .transforms import AbuttingGrating, ConvStem, Upsample

__all__ = [
    "__version__",
    "GratingSpec",
    "MaskPair",
    "binarize",
    "grating_coordinate",
    "render_grating",
    "apply_abutting_grating",
    "upsample",
    "LabeledDataset",
    "ClassMap",
    "CATEGORY_NAMES_16",
    "load_class_map",
    "parse_idx",
    "write_idx_images",
    "write_idx_labels",
    "load_png_gray",
    "write_png_gray",
    "BenchmarkManifest",
    "load_manifest",
    "ConditionGrid",
    "GeneratorConfig",
    "generate",
    "sample_human_subset",
    "PredictionSet",
    "ConditionResult",
    "map_to_16",
    "score",
    "summarize",
    "outliers",
    "read_predictions",
    "AbuttingGrating",
    "Upsample",
    "ConvStem",
]
