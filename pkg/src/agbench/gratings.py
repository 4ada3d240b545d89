"""Abutting-grating corruption.

An input image is thresholded into complementary figure/background masks.
Two 1-pixel-wide line gratings with the same interval but a half-cycle
phase offset are rendered, one gated through each mask, and the two halves
are joined. The silhouette boundary then carries no luminance contrast of
its own: it is visible only as the offset between abutting line gratings.

Directions:
    horizontal  lines of constant y (rows)
    vertical    lines of constant x (columns)
    diag_ur     lines of constant x + y (upper-right to lower-left)
    diag_ul     lines of constant x - y (upper-left to lower-right)

With interval 2 the figure and background lines touch corner-to-corner
diagonally; the pattern degenerates into an abutting square wave rather
than a spaced grating. It is still generated, matching the benchmark's
interval-2 condition.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .validation import (
    check_direction,
    check_image,
    check_interval,
    check_polarity,
    check_threshold,
)

__all__ = [
    "GratingSpec",
    "MaskPair",
    "binarize",
    "grating_coordinate",
    "coordinate_field",
    "background_phase",
    "render_grating",
    "apply_abutting_grating",
]


@dataclass(frozen=True)
class GratingSpec:
    """Every free parameter of the corruption.

    The background grating's phase is never stored; it is always derived
    as (figure_phase + interval/2) mod interval.
    """

    direction: str = "horizontal"
    interval: int = 4
    threshold: float = 0.5
    figure_phase: int = 0
    polarity: str = "lines_white_on_black"

    def validate(self) -> "GratingSpec":
        check_direction(self.direction)
        check_interval(self.interval)
        check_threshold(self.threshold)
        check_polarity(self.polarity)
        if not (0 <= self.figure_phase < self.interval):
            raise ValueError(
                f"figure_phase must lie in [0, interval), got "
                f"{self.figure_phase} with interval {self.interval}"
            )
        return self

    @property
    def line_value(self) -> float:
        return 1.0 if self.polarity == "lines_white_on_black" else 0.0

    @property
    def ground_value(self) -> float:
        return 1.0 - self.line_value


@dataclass(frozen=True)
class MaskPair:
    """Complementary boolean partitions of an image: figure and background."""

    figure: np.ndarray
    background: np.ndarray

    def swapped(self) -> "MaskPair":
        """Exchange the figure/background roles (dark-figure inputs)."""
        return MaskPair(figure=self.background, background=self.figure)


def binarize(image, threshold: float = 0.5) -> MaskPair:
    """Split an image into figure/background masks by thresholding.

    A pixel belongs to the figure iff its value is strictly greater than
    the threshold, so a pixel exactly at threshold lands in the background.
    """
    img = check_image(image)
    check_threshold(threshold)
    figure = img > threshold
    return MaskPair(figure=figure, background=~figure)


def grating_coordinate(x: int, y: int, direction: str) -> int:
    """Reduce a 2-D pixel position to the 1-D axis the grating varies along.

    For diag_ul the result may be negative; callers take it modulo the
    interval (Python's % already yields a nonnegative remainder).
    """
    check_direction(direction)
    if direction == "horizontal":
        return y
    if direction == "vertical":
        return x
    if direction == "diag_ur":
        return x + y
    return x - y


def coordinate_field(height: int, width: int, direction: str) -> np.ndarray:
    """Vectorized grating_coordinate over a full (height, width) grid."""
    check_direction(direction)
    ys = np.arange(height, dtype=np.int64)[:, np.newaxis]
    xs = np.arange(width, dtype=np.int64)[np.newaxis, :]
    if direction == "horizontal":
        return np.broadcast_to(ys, (height, width)).copy()
    if direction == "vertical":
        return np.broadcast_to(xs, (height, width)).copy()
    if direction == "diag_ur":
        return xs + ys
    return xs - ys


def background_phase(spec: GratingSpec) -> int:
    """Phase of the background grating: half a cycle past the figure's."""
    return (spec.figure_phase + spec.interval // 2) % spec.interval


def render_grating(width: int, height: int, spec: GratingSpec, phase: int) -> np.ndarray:
    """Render a full-field line grating at the given phase.

    A pixel is a line pixel iff its grating coordinate is congruent to
    `phase` modulo the interval; lines are exactly 1 pixel wide.
    """
    spec.validate()
    if not (0 <= phase < spec.interval):
        raise ValueError(f"phase must lie in [0, interval), got {phase}")
    coords = coordinate_field(height, width, spec.direction)
    line = (coords - phase) % spec.interval == 0
    return np.where(line, spec.line_value, spec.ground_value)


def apply_abutting_grating(image, spec: GratingSpec, *, figure_is_dark: bool = False) -> np.ndarray:
    """Corrupt one image into its abutting-grating version.

    The figure region receives the grating at spec.figure_phase, the
    background the grating shifted by half a cycle. Output pixels are
    strictly binary: either the polarity's line value or ground value.

    With figure_is_dark the mask roles are swapped after thresholding,
    for silhouette-style inputs where the object is dark on a light
    ground.
    """
    spec.validate()
    img = check_image(image)
    masks = binarize(img, spec.threshold)
    if figure_is_dark:
        masks = masks.swapped()
    return compose_gratings(masks, spec)


def compose_gratings(masks: MaskPair, spec: GratingSpec) -> np.ndarray:
    """Join the two half-cycle-shifted gratings through a mask pair."""
    spec.validate()
    height, width = masks.figure.shape
    coords = coordinate_field(height, width, spec.direction)
    residue = coords % spec.interval
    line = np.where(
        masks.figure,
        residue == spec.figure_phase,
        residue == background_phase(spec),
    )
    return np.where(line, spec.line_value, spec.ground_value)
