# -*- coding: utf-8 -*-
"""
Tests for point adjustment, evaluation and the reference detectors.
"""
import logging
import unittest

import numpy as np

from darts_mtsad.data.scaling import standardize
from darts_mtsad.domain.dataset import TimeSeriesDataset
from darts_mtsad.domain.report import AnomalyReport
from darts_mtsad.result.errors import ContractError
from darts_mtsad.result.optional import Some
from darts_mtsad.scoring.baseline import zscore_scores
from darts_mtsad.scoring.evaluation import (
    average_f1, best_threshold, evaluate, metrics, point_adjust, segments
)
from darts_mtsad.scoring.robustness import Comparison

logging.disable(logging.CRITICAL)


def _adjust_by_hand(pred, truth):
    adjusted = list(pred)
    t = 0
    while t < len(truth):
        if truth[t]:
            end = t
            while end < len(truth) and truth[end]:
                end += 1
            if any(pred[t:end]):
                for k in range(t, end):
                    adjusted[k] = True
            t = end
        else:
            t += 1
    return adjusted


def _sweep_by_hand(scores, truth):
    best = None
    for candidate in sorted(set(scores.tolist())):
        precision, recall = metrics(scores >= candidate, truth)
        f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
        key = (f1, precision, candidate)
        if best is None or key > best:
            best = key
    return best


class TestPointAdjust(unittest.TestCase):
    """Tests for segments and point_adjust."""

    def test_segments_finds_runs(self):
        starts, stops = segments([0, 1, 1, 0, 1])
        self.assertEqual((starts.tolist(), stops.tolist()), ([1, 4], [3, 5]), "Runs should be [1,3) and [4,5)")

    def test_point_adjust_expands_detected_segment(self):
        adjusted = point_adjust([0, 0, 1, 0, 0], [0, 1, 1, 1, 0])
        self.assertEqual(adjusted.astype(int).tolist(), [0, 1, 1, 1, 0], "A hit should mark its whole segment")

    def test_point_adjust_keeps_false_alarms(self):
        adjusted = point_adjust([1, 0, 0, 0], [0, 0, 1, 1])
        self.assertEqual(adjusted.astype(int).tolist(), [1, 0, 0, 0], "Missed segments stay negative")

    def test_point_adjust_matches_hand_rule(self):
        rng = np.random.default_rng(0)
        for _ in range(1000):
            length = int(rng.integers(1, 501))
            truth = rng.random(length) > rng.uniform(0.5, 0.95)
            pred = rng.random(length) > 0.8
            self.assertEqual(
                point_adjust(pred, truth).tolist(), _adjust_by_hand(pred.tolist(), truth.tolist()),
                "Point adjustment should follow the segment rule"
            )

    def test_point_adjust_rejects_length_mismatch(self):
        with self.assertRaises(ContractError, msg="Different lengths should be rejected"):
            point_adjust([0, 1], [0, 1, 1])

    def test_metrics_undefined_values_are_zero(self):
        self.assertEqual(metrics([0, 0], [0, 0]), (0.0, 0.0), "No flags and no positives should give zeros")


class TestBestThreshold(unittest.TestCase):
    """Tests for best_threshold and evaluate."""

    def test_best_threshold_matches_exhaustive_sweep(self):
        rng = np.random.default_rng(3)
        for _ in range(25):
            truth = np.zeros(200, dtype=bool)
            for start in rng.integers(0, 190, size=4):
                truth[start:start + rng.integers(1, 10)] = True
            scores = np.round(rng.random(200) + truth * rng.random(200), 2)
            threshold, precision, recall = best_threshold(scores, truth)
            f1, expected_precision, expected_threshold = _sweep_by_hand(scores, truth)
            self.assertAlmostEqual(
                2 * precision * recall / (precision + recall), f1, places=12,
                msg="Vectorized sweep should find the best F1"
            )
            self.assertEqual(
                (threshold, precision), (expected_threshold, expected_precision),
                "Ties should prefer higher precision, then a higher threshold"
            )

    def test_evaluate_best_f1_ignores_monotone_rescaling(self):
        rng = np.random.default_rng(6)
        truth = np.zeros(300, dtype=bool)
        truth[40:55] = truth[180:190] = True
        scores = rng.random(300) + 0.8 * truth * rng.random(300)
        plain = evaluate(scores, truth)
        stretched = evaluate(np.exp(4.0 * scores) + 2.0, truth)
        self.assertEqual(
            (stretched.f1(), stretched.decisions().tolist()), (plain.f1(), plain.decisions().tolist()),
            "A strictly increasing transform should keep the best decisions"
        )

    def test_evaluate_best_f1_is_at_least_any_fixed_f1(self):
        rng = np.random.default_rng(7)
        truth = np.zeros(300, dtype=bool)
        truth[70:90] = truth[200:204] = True
        scores = rng.random(300) + 0.5 * truth
        best = evaluate(scores, truth).f1()
        for threshold in rng.random(50) * 1.5:
            fixed = evaluate(scores, truth, "fixed", Some(float(threshold))).f1()
            self.assertGreaterEqual(best + 1e-12, fixed, "Threshold %.3f should not beat the sweep" % threshold)

    def test_evaluate_best_f1_perfect_separation(self):
        report = evaluate(np.array([0.1, 0.9, 0.2]), np.array([0, 1, 0]), "best_f1")
        self.assertEqual((report.f1(), report.threshold()), (1.0, 0.9), "The anomaly score should be the threshold")

    def test_evaluate_fixed_threshold(self):
        report = evaluate(np.array([0.1, 0.6, 0.7, 0.2]), np.array([0, 1, 1, 0]), "fixed", Some(0.65))
        self.assertEqual(
            (report.precision(), report.recall()), (1.0, 1.0),
            "One hit inside the segment should recover the whole segment"
        )
        self.assertEqual(report.decisions().tolist(), [False, False, True, False],
                         "Decisions should be raw scores above the threshold")

    def test_evaluate_fixed_needs_threshold(self):
        with self.assertRaises(ContractError, msg="Fixed mode without a threshold should fail"):
            evaluate(np.array([0.1]), np.array([1]), "fixed")

    def test_evaluate_rejects_unknown_mode(self):
        with self.assertRaises(ContractError, msg="An unknown mode should fail"):
            evaluate(np.array([0.1]), np.array([1]), "auc")

    def test_evaluate_rejects_empty_scores(self):
        with self.assertRaises(ContractError, msg="Empty scores should fail"):
            evaluate(np.array([]), np.array([]))

    def test_evaluate_without_anomalies_gives_zero(self):
        report = evaluate(np.array([0.1, 0.5]), np.array([0, 0]))
        self.assertEqual(report.f1(), 0.0, "No anomalies should give F1 0")

    def test_report_json_fields(self):
        report = AnomalyReport(np.array([0.1, 0.9]), 0.5, 1.0, 0.5, "fixed")
        self.assertEqual(
            sorted(report.json().keys()), ["f1", "mode", "precision", "recall", "threshold"],
            "json should carry mode, threshold and metrics"
        )
        self.assertFalse(report.channel_scores().is_present(), "Channel scores default to Empty")

    def test_average_f1_of_reference_values(self):
        self.assertAlmostEqual(average_f1([0.7110, 0.8531, 0.9194]), 0.8278, places=4,
                               msg="Average of three runs should be 0.8278")

    def test_average_f1_rejects_empty(self):
        with self.assertRaises(ContractError, msg="Nothing to average should fail"):
            average_f1([])


class TestBaseline(unittest.TestCase):
    """Tests for zscore_scores."""

    def setUp(self):
        rng = np.random.default_rng(0)
        raw = TimeSeriesDataset(rng.standard_normal((50, 2)), ["a", "b"])
        self.raw = raw
        self.scaled = standardize(raw, [])[0]

    def test_zscore_scores_are_absolute_standardized_values(self):
        scores = zscore_scores(self.scaled, start=10)
        self.assertTrue(
            np.allclose(scores.channel(), np.abs(self.scaled.values()[10:])),
            "Channel scores should be absolute standardized values"
        )
        self.assertEqual(scores.start(), 10, "Scores should start where requested")

    def test_zscore_scores_need_standardized_series(self):
        with self.assertRaises(ContractError, msg="Raw data should be rejected"):
            zscore_scores(self.raw)

    def test_zscore_scores_reject_start_past_end(self):
        with self.assertRaises(ContractError, msg="A start past the end should be rejected"):
            zscore_scores(self.scaled, start=50)


class TestComparison(unittest.TestCase):
    """Tests for Comparison."""

    def test_comparison_degradation(self):
        comparison = Comparison.of({"f1": 0.86}, {"f1": 0.81})
        self.assertAlmostEqual(comparison.degradation(), 0.05, places=12, msg="Degradation is clean minus noisy")
        self.assertTrue(comparison.within(0.10), "0.05 is within 0.10")
        self.assertFalse(comparison.within(0.01), "0.05 is not within 0.01")

    def test_comparison_requires_f1(self):
        with self.assertRaises(ContractError, msg="A document without f1 should be rejected"):
            Comparison.of({"f1": 0.9}, {"precision": 0.8})


if __name__ == "__main__":
    unittest.main()
