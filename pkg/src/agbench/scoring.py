"""Scoring of external model predictions against generated benchmarks.

Predictions arrive as CSV rows `stimulus_id,fine_class`. Correctness is
counted in exact integer arithmetic; accuracy is only materialized as a
float at reporting time. With a class map, fine-grained predictions are
projected onto the 16 coarse categories first and unmapped predictions
count as incorrect.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from pathlib import Path

from .classmap import ClassMap, N_FINE_CLASSES
from .manifest import BenchmarkManifest, ConditionRecord

RANDOM_GUESS_16 = 1.0 / 16.0  # 6.25%, the silhouette-benchmark chance level


class PredictionFormatError(ValueError):
    pass


class MissingPredictionsError(ValueError):
    def __init__(self, missing: list[str]):
        self.missing = list(missing)
        shown = ", ".join(self.missing[:10])
        more = "" if len(self.missing) <= 10 else f" (+{len(self.missing) - 10} more)"
        super().__init__(f"predictions missing for {len(self.missing)} stimuli: {shown}{more}")


@dataclass
class PredictionSet:
    rows: dict[str, int]  # stimulus id -> predicted class index
    model_name: str = "model"


@dataclass
class ConditionResult:
    model_name: str
    dataset: str
    direction: str
    interval: int
    correct: int
    n: int

    @property
    def accuracy(self) -> float:
        return self.correct / self.n if self.n else 0.0

    @property
    def condition_key(self) -> tuple[str, str, int]:
        return (self.dataset, self.direction, self.interval)

    def to_dict(self) -> dict:
        return {
            "model_name": self.model_name,
            "dataset": self.dataset,
            "direction": self.direction,
            "interval": self.interval,
            "correct": self.correct,
            "n": self.n,
            "accuracy": self.accuracy,
        }


def read_predictions(text: str, model_name: str = "model") -> PredictionSet:
    """Parse `stimulus_id,fine_class` CSV; the header row is optional."""
    rows: dict[str, int] = {}
    reader = csv.reader(io.StringIO(text))
    for lineno, row in enumerate(reader, start=1):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != 2:
            raise PredictionFormatError(f"line {lineno}: expected 2 columns, got {len(row)}")
        sid, cls_text = row[0].strip(), row[1].strip()
        if lineno == 1 and sid == "stimulus_id":
            continue
        try:
            cls = int(cls_text)
        except ValueError as exc:
            raise PredictionFormatError(f"line {lineno}: bad class index {cls_text!r}") from exc
        if sid in rows:
            raise PredictionFormatError(f"line {lineno}: duplicate stimulus id {sid!r}")
        rows[sid] = cls
    return PredictionSet(rows=rows, model_name=model_name)


def read_predictions_file(path, model_name: str | None = None) -> PredictionSet:
    p = Path(path)
    return read_predictions(p.read_text(encoding="utf-8"), model_name or p.stem)


def map_to_16(fine: int, class_map: ClassMap) -> int | None:
    """Project a fine class through the map; None when unmapped."""
    if not (0 <= fine < N_FINE_CLASSES):
        raise ValueError(f"fine class {fine} out of range [0, {N_FINE_CLASSES})")
    return class_map.lookup(fine)


def score(predictions: PredictionSet, truth: list[tuple[str, int]],
          class_map: ClassMap | None = None, *, dataset: str = "",
          direction: str = "", interval: int = 0) -> ConditionResult:
    """Count correct predictions over the truth items of one condition.

    truth is a list of (stimulus id, label index). Every truth stimulus
    must be predicted; extra predictions are ignored.
    """
    missing = [sid for sid, _ in truth if sid not in predictions.rows]
    if missing:
        raise MissingPredictionsError(missing)
    correct = 0
    for sid, label in truth:
        predicted = predictions.rows[sid]
        if class_map is not None:
            predicted = map_to_16(predicted, class_map)
            if predicted is None:
                continue  # unmapped predictions are incorrect
        if predicted == label:
            correct += 1
    return ConditionResult(
        model_name=predictions.model_name,
        dataset=dataset, direction=direction, interval=interval,
        correct=correct, n=len(truth),
    )


def condition_truth(cond: ConditionRecord) -> list[tuple[str, int]]:
    return [(item.id, item.label) for item in cond.items]


def score_manifest(predictions: PredictionSet, manifest: BenchmarkManifest,
                   class_map: ClassMap | None = None,
                   condition: str | None = None) -> list[ConditionResult]:
    """Score every manifest condition (or just `condition`, e.g. "h_4")."""
    results = []
    for cond in manifest.conditions:
        if condition is not None and cond.dir != condition:
            continue
        results.append(score(
            predictions, condition_truth(cond), class_map,
            dataset=manifest.dataset, direction=cond.direction,
            interval=cond.interval,
        ))
    if condition is not None and not results:
        raise ValueError(f"condition {condition!r} not found in manifest")
    return results


def summarize(results: list[ConditionResult], bin_width: float = 0.05) -> dict:
    """Histogram accuracies per condition.

    Bin k covers [k*w, (k+1)*w); a value on a bin edge goes to the higher
    bin, except 1.0 which stays in the top bin. The 16-class chance level
    is included as reference metadata.
    """
    n_bins_f = 1.0 / bin_width
    n_bins = round(n_bins_f)
    if not math.isclose(n_bins_f, n_bins, rel_tol=1e-9) or n_bins < 1:
        raise ValueError(f"bin width {bin_width} must divide 1 evenly")

    by_condition: dict[tuple[str, str, int], list[ConditionResult]] = {}
    for res in results:
        by_condition.setdefault(res.condition_key, []).append(res)

    conditions = []
    for (dataset, direction, interval), group in sorted(by_condition.items()):
        counts = [0] * n_bins
        for res in group:
            idx = min(int(res.accuracy / bin_width), n_bins - 1)
            counts[idx] += 1
        conditions.append({
            "dataset": dataset,
            "direction": direction,
            "interval": interval,
            "counts": counts,
            "n": len(group),
        })
    return {
        "bin_width": bin_width,
        "n_bins": n_bins,
        "random_guess": RANDOM_GUESS_16,
        "conditions": conditions,
    }


def outliers(results: list[ConditionResult], threshold: float = 0.20) -> list[str]:
    """Models whose accuracy exceeds the threshold under any condition."""
    if not (0.0 < threshold < 1.0):
        raise ValueError(f"threshold must lie in (0, 1), got {threshold}")
    names = {res.model_name for res in results if res.accuracy > threshold}
    return sorted(names)
