import numpy as np
import pytest

from agbench.classmap import CATEGORY_NAMES_16
from agbench.scoring import (
    ConditionResult,
    MissingPredictionsError,
    PredictionFormatError,
    PredictionSet,
    map_to_16,
    outliers,
    read_predictions,
    score,
    summarize,
)
from agbench.synthetic import synthetic_class_map


def make_result(model, accuracy_pair, direction="horizontal", interval=4):
    correct, n = accuracy_pair
    return ConditionResult(model_name=model, dataset="silhouettes",
                           direction=direction, interval=interval,
                           correct=correct, n=n)


class TestReadPredictions:
    def test_header_optional(self):
        with_header = read_predictions("stimulus_id,fine_class\na,3\nb,5\n")
        without = read_predictions("a,3\nb,5\n")
        assert with_header.rows == without.rows == {"a": 3, "b": 5}

    def test_duplicate_id_rejected(self):
        with pytest.raises(PredictionFormatError, match="duplicate"):
            read_predictions("a,3\na,4\n")

    def test_bad_class_rejected(self):
        with pytest.raises(PredictionFormatError, match="class"):
            read_predictions("a,dog\n")


class TestMapTo16:
    def test_unmapped_is_none(self):
        cmap = synthetic_class_map(seed=0)
        unmapped = next(i for i in range(1000) if i not in cmap.entries)
        assert map_to_16(unmapped, cmap) is None

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            map_to_16(1000, synthetic_class_map())


class TestScore:
    def test_perfect_predictions(self):
        truth = [("a", 1), ("b", 2)]
        preds = PredictionSet(rows={"a": 1, "b": 2}, model_name="m")
        result = score(preds, truth)
        assert result.accuracy == 1.0
        assert result.correct == 2

    def test_all_wrong(self):
        truth = [("a", 1), ("b", 2)]
        preds = PredictionSet(rows={"a": 0, "b": 0})
        assert score(preds, truth).accuracy == 0.0

    def test_missing_predictions_listed(self):
        truth = [("a", 1), ("b", 2), ("c", 3)]
        preds = PredictionSet(rows={"a": 1})
        with pytest.raises(MissingPredictionsError) as err:
            score(preds, truth)
        assert set(err.value.missing) == {"b", "c"}

    def test_unmapped_prediction_is_incorrect(self):
        cmap = synthetic_class_map(seed=0)
        unmapped = next(i for i in range(1000) if i not in cmap.entries)
        truth = [("a", 0)]
        preds = PredictionSet(rows={"a": unmapped})
        assert score(preds, truth, cmap).correct == 0

    def test_mapped_prediction_correct(self):
        cmap = synthetic_class_map(seed=0)
        fine, coarse = next(iter(cmap.entries.items()))
        result = score(PredictionSet(rows={"a": fine}), [("a", coarse)], cmap)
        assert result.correct == 1

    def test_uniform_random_digits_near_ten_percent(self):
        rng = np.random.default_rng(7)
        truth = [(f"s{i}", int(rng.integers(0, 10))) for i in range(10_000)]
        preds = PredictionSet(rows={sid: int(rng.integers(0, 10)) for sid, _ in truth})
        # 99% binomial interval around p=0.1 with n=10000 is within +-0.008
        assert score(preds, truth).accuracy == pytest.approx(0.10, abs=0.01)

    def test_permutation_invariance(self, rng):
        truth = [(f"s{i}", int(rng.integers(0, 5))) for i in range(50)]
        preds = PredictionSet(rows={sid: int(rng.integers(0, 5)) for sid, _ in truth})
        a = score(preds, truth).correct
        b = score(preds, list(reversed(truth))).correct
        assert a == b

    def test_exact_counts(self):
        result = make_result("m", (13, 160))
        assert result.accuracy * result.n == pytest.approx(13)


class TestSummarize:
    def test_empty(self):
        doc = summarize([], bin_width=0.05)
        assert doc["conditions"] == []
        assert doc["random_guess"] == 0.0625

    def test_equal_results_single_bin(self):
        results = [make_result(f"m{i}", (8, 160)) for i in range(5)]
        doc = summarize(results, bin_width=0.05)
        counts = doc["conditions"][0]["counts"]
        assert sum(counts) == 5
        assert counts[1] == 5  # 0.05 <= 8/160=0.05 < 0.10 -> the higher bin

    def test_boundary_goes_to_higher_bin(self):
        doc = summarize([make_result("m", (8, 160))], bin_width=0.05)
        assert doc["conditions"][0]["counts"][1] == 1

    def test_full_accuracy_stays_in_top_bin(self):
        doc = summarize([make_result("m", (160, 160))], bin_width=0.05)
        assert doc["conditions"][0]["counts"][-1] == 1

    def test_counts_sum_to_results(self, rng):
        results = [make_result(f"m{i}", (int(rng.integers(0, 161)), 160))
                   for i in range(40)]
        doc = summarize(results, bin_width=0.1)
        assert sum(doc["conditions"][0]["counts"]) == 40

    def test_bad_bin_width_rejected(self):
        with pytest.raises(ValueError, match="divide"):
            summarize([], bin_width=0.3)

    def test_groups_by_condition(self):
        results = [make_result("m", (5, 160), interval=4),
                   make_result("m", (5, 160), interval=6)]
        doc = summarize(results)
        assert len(doc["conditions"]) == 2


class TestOutliers:
    def test_all_at_chance_empty(self):
        results = [make_result(f"m{i}", (10, 160)) for i in range(20)]
        assert outliers(results, 0.20) == []

    def test_one_above_threshold_listed_once(self):
        results = [make_result("good", (56, 160), interval=4),
                   make_result("good", (60, 160), interval=6),
                   make_result("meh", (10, 160))]
        assert outliers(results, 0.20) == ["good"]

    def test_threshold_is_strict(self):
        assert outliers([make_result("edge", (32, 160))], 0.20) == []
