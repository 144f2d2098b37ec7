# -*- coding: utf-8 -*-
"""
AnomalyReport domain object: decisions and point-adjusted metrics.

Example:
    >>> report.f1()
    1.0
    >>> report.json()["precision"]
    1.0
"""
import numpy as np

from darts_mtsad.result.optional import Optional


class AnomalyReport:
    """
    Scores, threshold, decisions and precision / recall / F1.

    Decisions are exactly global_scores >= threshold. F1 is
    2PR / (P + R), or 0 when P + R is 0.

    Example:
        >>> r = AnomalyReport(np.array([0.1, 0.9]), 0.5, 1.0, 1.0, "best_f1")
        >>> r.decisions().tolist()
        [False, True]
    """

    def __init__(self, global_scores, threshold, precision, recall, mode,
                 channel_scores=None):
        """
        Create an AnomalyReport.

        Args:
            global_scores: Array of L' scores
            threshold: Decision threshold
            precision: Point-adjusted precision
            recall: Point-adjusted recall
            mode: "best_f1" or "fixed"
            channel_scores: L' x N array or None
        """
        self._scores = np.asarray(global_scores, dtype=np.float64)
        self._threshold = float(threshold)
        self._precision = float(precision)
        self._recall = float(recall)
        self._mode = mode
        self._channels = Optional.of(channel_scores)

    def global_scores(self):
        return self._scores

    def channel_scores(self):
        """
        Get per-channel scores.

        Returns:
            Optional[L' x N array]
        """
        return self._channels

    def threshold(self):
        return self._threshold

    def decisions(self):
        return self._scores >= self._threshold

    def precision(self):
        return self._precision

    def recall(self):
        return self._recall

    def f1(self):
        total = self._precision + self._recall
        if total <= 0:
            return 0.0
        return 2.0 * self._precision * self._recall / total

    def mode(self):
        return self._mode

    def json(self):
        """
        Convert to a JSON-compatible dict.

        Returns:
            Dict with mode, threshold and metrics
        """
        return {
            "mode": self._mode,
            "threshold": self._threshold,
            "precision": self._precision,
            "recall": self._recall,
            "f1": self.f1(),
        }

    def __repr__(self):
        return "AnomalyReport(P=%.4f, R=%.4f, F1=%.4f, threshold=%.6g)" % (
            self._precision, self._recall, self.f1(), self._threshold
        )
