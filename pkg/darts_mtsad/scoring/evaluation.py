# -*- coding: utf-8 -*-
"""
Point-adjusted precision, recall and F1.

A true anomaly segment counts as detected when any of its points is
predicted positive; all of its points then count as detected.

Example:
    >>> point_adjust([0, 0, 1, 0, 0], [0, 1, 1, 1, 0]).astype(int).tolist()
    [0, 1, 1, 1, 0]
    >>> evaluate(np.array([0.1, 0.9, 0.2]), np.array([0, 1, 0]), "best_f1").f1()
    1.0
"""
import logging

import numpy as np

from darts_mtsad.domain.report import AnomalyReport
from darts_mtsad.result.errors import ContractError
from darts_mtsad.result.optional import Empty


_log = logging.getLogger(__name__)

MODES = ("best_f1", "fixed")


def segments(truth):
    """
    Find maximal runs of true anomalies.

    Args:
        truth: Boolean array

    Returns:
        Tuple (starts, stops) of integer arrays, stops exclusive
    """
    flags = np.asarray(truth).astype(np.int8)
    edges = np.diff(np.concatenate(([0], flags, [0])))
    return np.flatnonzero(edges == 1), np.flatnonzero(edges == -1)


def point_adjust(pred, truth):
    """
    Mark whole true segments positive when any point inside is predicted.

    Args:
        pred: L' predictions
        truth: L' labels

    Returns:
        Boolean array of adjusted predictions

    Raises:
        ContractError: If lengths differ
    """
    pred = np.asarray(pred).astype(bool)
    truth = np.asarray(truth).astype(bool)
    if pred.shape != truth.shape:
        raise ContractError(
            "Prediction and label lengths differ",
            {"pred": pred.shape[0], "truth": truth.shape[0]}
        )
    adjusted = pred.copy()
    for start, stop in zip(*segments(truth)):
        if pred[start:stop].any():
            adjusted[start:stop] = True
    return adjusted


def metrics(pred, truth):
    """
    Precision and recall of raw predictions after point adjustment.

    Args:
        pred: L' predictions
        truth: L' labels

    Returns:
        Tuple (precision, recall), 0 where undefined
    """
    adjusted = point_adjust(pred, truth)
    truth = np.asarray(truth).astype(bool)
    hits = float(np.sum(adjusted & truth))
    flagged = float(np.sum(adjusted))
    positives = float(np.sum(truth))
    precision = hits / flagged if flagged else 0.0
    recall = hits / positives if positives else 0.0
    return precision, recall


def evaluate(global_scores, truth, mode="best_f1", threshold=Empty(), channel_scores=None):
    """
    Turn scores into an AnomalyReport.

    best_f1 tries every distinct score as threshold and keeps the
    highest point-adjusted F1, preferring higher precision on ties.
    fixed uses the given threshold.

    Args:
        global_scores: L' scores
        truth: L' labels
        mode: best_f1 or fixed
        threshold: Optional[float], required in fixed mode
        channel_scores: L' x N array or None, carried into the report

    Returns:
        AnomalyReport

    Raises:
        ContractError: If inputs are empty, lengths differ, the mode is
            unknown or fixed mode has no threshold
    """
    scores = np.asarray(global_scores, dtype=np.float64).reshape(-1)
    truth = np.asarray(truth).astype(bool).reshape(-1)
    if scores.size == 0:
        raise ContractError("Nothing to evaluate", {})
    if scores.shape != truth.shape:
        raise ContractError(
            "Score and label lengths differ", {"scores": scores.size, "truth": truth.size}
        )
    if mode not in MODES:
        raise ContractError("Unknown evaluation mode", {"mode": mode})
    if mode == "fixed":
        value = threshold.fold(_missing_threshold, float)
        precision, recall = metrics(scores >= value, truth)
    else:
        value, precision, recall = best_threshold(scores, truth)
    report = AnomalyReport(scores, value, precision, recall, mode, channel_scores)
    _log.info("Evaluated %d timesteps: %r", scores.size, report)
    return report


def best_threshold(scores, truth):
    """
    Sweep all distinct scores as thresholds in one vectorized pass.

    Args:
        scores: L' scores
        truth: L' boolean labels

    Returns:
        Tuple (threshold, precision, recall)
    """
    candidates = np.unique(scores)
    normal = np.sort(scores[~truth])
    false_alarms = normal.size - np.searchsorted(normal, candidates, side="left")
    starts, stops = segments(truth)
    peaks = np.array([scores[a:b].max() for a, b in zip(starts, stops)])
    lengths = (stops - starts).astype(np.float64)
    if peaks.size:
        order = np.argsort(peaks)
        ranked = peaks[order]
        tail = np.concatenate((np.cumsum(lengths[order][::-1])[::-1], [0.0]))
        hits = tail[np.searchsorted(ranked, candidates, side="left")]
    else:
        hits = np.zeros(candidates.size)
    flagged = hits + false_alarms
    positives = float(truth.sum())
    precision = np.divide(hits, flagged, out=np.zeros_like(hits), where=flagged > 0)
    recall = hits / positives if positives else np.zeros_like(hits)
    total = precision + recall
    f1 = np.divide(2.0 * precision * recall, total, out=np.zeros_like(hits), where=total > 0)
    best = np.lexsort((candidates, precision, f1))[-1]
    return float(candidates[best]), float(precision[best]), float(recall[best])


def average_f1(reports):
    """
    Arithmetic mean of F1 values.

    Args:
        reports: AnomalyReports or plain F1 numbers

    Returns:
        Float mean

    Raises:
        ContractError: If there is nothing to average
    """
    values = [r.f1() if isinstance(r, AnomalyReport) else float(r) for r in reports]
    if not values:
        raise ContractError("No reports to average", {})
    return float(np.mean(values))


def _missing_threshold():
    raise ContractError("Fixed mode needs a threshold", {})
