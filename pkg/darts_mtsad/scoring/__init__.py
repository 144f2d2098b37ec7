# -*- coding: utf-8 -*-
"""
Anomaly scores, point-adjusted evaluation and reference detectors.
"""
from darts_mtsad.scoring.calibration import Calibration
from darts_mtsad.scoring.scorer import (
    ChannelScores, Scorer, fit_calibration, window_errors, dense_errors
)
from darts_mtsad.scoring.evaluation import (
    point_adjust, evaluate, average_f1, best_threshold, segments
)
from darts_mtsad.scoring.baseline import zscore_scores
from darts_mtsad.scoring.robustness import Comparison

__all__ = [
    'Calibration', 'ChannelScores', 'Scorer', 'fit_calibration',
    'window_errors', 'dense_errors', 'point_adjust', 'evaluate',
    'average_f1', 'best_threshold', 'segments', 'zscore_scores', 'Comparison'
]
