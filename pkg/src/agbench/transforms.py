"""Estimator-style wrappers so the pipeline composes with scikit-learn.

All three transformers are stateless: fit only validates parameters and
returns self, and transform maps an image batch (n, height, width) to its
corrupted, resized or probed counterpart. They follow the sklearn
contract (get_params/set_params, clone-safe __init__), so e.g.

    Pipeline([("up", Upsample(224, 224)), ("ag", AbuttingGrating(interval=8))])

is a valid end-to-end corruption stage.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin

from .gratings import GratingSpec, apply_abutting_grating
from .interpolate import upsample
from .probe.stem import BN_EPS, STEM_TAPS, run_stem
from .validation import check_image_batch


class AbuttingGrating(TransformerMixin, BaseEstimator):
    """Abutting-grating corruption as a batch transformer."""

    def __init__(self, direction="horizontal", interval=4, threshold=0.5,
                 figure_phase=0, polarity="lines_white_on_black",
                 figure_is_dark=False):
        self.direction = direction
        self.interval = interval
        self.threshold = threshold
        self.figure_phase = figure_phase
        self.polarity = polarity
        self.figure_is_dark = figure_is_dark

    def _spec(self) -> GratingSpec:
        return GratingSpec(
            direction=self.direction,
            interval=self.interval,
            threshold=self.threshold,
            figure_phase=self.figure_phase,
            polarity=self.polarity,
        ).validate()

    def fit(self, X, y=None):
        self._spec()
        check_image_batch(X)
        return self

    def transform(self, X):
        spec = self._spec()
        batch = check_image_batch(X)
        return np.stack([
            apply_abutting_grating(img, spec, figure_is_dark=self.figure_is_dark)
            for img in batch
        ])


class Upsample(TransformerMixin, BaseEstimator):
    """Batch upsampling to a fixed target size."""

    def __init__(self, height=224, width=224, kernel="bilinear"):
        self.height = height
        self.width = width
        self.kernel = kernel

    def fit(self, X, y=None):
        check_image_batch(X)
        return self

    def transform(self, X):
        batch = check_image_batch(X)
        return np.stack([
            upsample(img, self.height, self.width, kernel=self.kernel)
            for img in batch
        ])


class ConvStem(TransformerMixin, BaseEstimator):
    """Stem forward pass returning feature maps at a chosen tap.

    transform maps (n, height, width) grayscale stimuli to
    (n, channels, h', w') activations at `tap`, one of
    "conv" | "bn" | "relu" | "pool".
    """

    def __init__(self, bundle=None, tap="bn", eps=BN_EPS):
        self.bundle = bundle
        self.tap = tap
        self.eps = eps

    def _check(self):
        if self.bundle is None:
            raise ValueError("ConvStem requires a WeightBundle")
        if self.tap not in STEM_TAPS:
            raise ValueError(f"tap must be one of {STEM_TAPS}, got {self.tap!r}")

    def fit(self, X, y=None):
        self._check()
        check_image_batch(X)
        return self

    def transform(self, X):
        self._check()
        batch = check_image_batch(X)
        return np.stack([
            run_stem(img, self.bundle, eps=self.eps)[self.tap] for img in batch
        ])
