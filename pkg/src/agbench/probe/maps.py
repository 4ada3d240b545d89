"""Activation-map summaries of stem outputs.

The average map is the signed channel mean min-max normalized to [0, 1],
so activation and depression survive as values above and below the
midtone. Per-filter maps are normalized by the min/max across ALL
channels, keeping cross-filter intensity comparable; a per-filter
normalization would hide which filter dominates the response.

Constant inputs have no range to normalize; they map to 0.5 everywhere.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from ..gratings import GratingSpec, MaskPair, background_phase, coordinate_field
from ..pngio import write_png_file
from ..validation import check_tensor

__all__ = ["average_activation_map", "per_filter_maps", "end_stopping_score", "export_maps"]


def _normalize(arr: np.ndarray, lo: float, hi: float) -> np.ndarray:
    if hi == lo:
        return np.full(arr.shape, 0.5)
    return (arr - lo) / (hi - lo)


def average_activation_map(features) -> np.ndarray:
    """Channel mean of a (C, H, W) tensor, min-max normalized to [0, 1]."""
    feats = check_tensor(features, 3, "features")
    mean = feats.mean(axis=0)
    return _normalize(mean, float(mean.min()), float(mean.max()))


def per_filter_maps(features) -> list[np.ndarray]:
    """One [0,1] map per channel, normalized by the global min/max."""
    feats = check_tensor(features, 3, "features")
    lo, hi = float(feats.min()), float(feats.max())
    return [_normalize(feats[c], lo, hi) for c in range(feats.shape[0])]


def _line_pixels(spec: GratingSpec, masks: MaskPair) -> np.ndarray:
    """Pixels that lie on their own region's grating lines."""
    h, w = masks.figure.shape
    residue = coordinate_field(h, w, spec.direction) % spec.interval
    return np.where(masks.figure,
                    residue == spec.figure_phase,
                    residue == background_phase(spec))


def _touches_other_region(masks: MaskPair) -> np.ndarray:
    """Pixels with a 4-neighbor on the other side of the mask boundary."""
    fig = masks.figure
    other = np.zeros(fig.shape, dtype=bool)
    other[:-1, :] |= fig[:-1, :] != fig[1:, :]
    other[1:, :] |= fig[1:, :] != fig[:-1, :]
    other[:, :-1] |= fig[:, :-1] != fig[:, 1:]
    other[:, 1:] |= fig[:, 1:] != fig[:, :-1]
    return other


def end_stopping_score(activation_map, spec: GratingSpec, masks: MaskPair) -> float:
    """How much the map concentrates at grating line-ends.

    Line-ends are mask-boundary pixels on grating lines; the score is the
    mean absolute activation over that 1-pixel band minus the mean over
    interior line pixels. Positive means end-stopped behavior.
    """
    amap = check_tensor(activation_map, 2, "activation_map")
    spec.validate()
    if amap.shape != masks.figure.shape:
        raise ValueError(
            f"activation map shape {amap.shape} does not match masks "
            f"{masks.figure.shape}"
        )
    lines = _line_pixels(spec, masks)
    ends = lines & _touches_other_region(masks)
    interior = lines & ~ends
    if not ends.any():
        raise ValueError("no mask-boundary pixels on grating lines")
    if not interior.any():
        raise ValueError("no interior line pixels; geometry too small to score")
    magnitude = np.abs(amap)
    return float(magnitude[ends].mean() - magnitude[interior].mean())


def export_maps(out_dir, maps, prefix: str = "map", raw_ranges=None) -> list[Path]:
    """Write maps as 8-bit grayscale PNGs plus a JSON sidecar each.

    raw_ranges supplies the pre-normalization (min, max) pair
    per map for the sidecars.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    if isinstance(maps, np.ndarray) and maps.ndim == 2:
        maps = [maps]
    written = []
    for i, m in enumerate(maps):
        name = f"{prefix}_{i:03d}" if len(maps) > 1 else prefix
        png_path = out / f"{name}.png"
        write_png_file(png_path, np.clip(m, 0.0, 1.0))
        sidecar = {"index": i}
        if raw_ranges is not None:
            lo, hi = raw_ranges[i]
            sidecar["raw_min"] = float(lo)
            sidecar["raw_max"] = float(hi)
        (out / f"{name}.json").write_text(json.dumps(sidecar, indent=2), encoding="utf-8")
        written.append(png_path)
    return written
