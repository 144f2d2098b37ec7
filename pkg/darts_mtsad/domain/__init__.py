# -*- coding: utf-8 -*-
"""
Domain value objects for multichannel anomaly detection.

Contains TimeSeriesDataset, TrainingSample, SparseGraphSet,
AffinityGraph, LossTerms and AnomalyReport.
"""
from darts_mtsad.domain.dataset import TimeSeriesDataset
from darts_mtsad.domain.sample import TrainingSample
from darts_mtsad.domain.graph import SparseGraphSet, AffinityGraph
from darts_mtsad.domain.loss import LossTerms
from darts_mtsad.domain.report import AnomalyReport

__all__ = [
    'TimeSeriesDataset', 'TrainingSample', 'SparseGraphSet',
    'AffinityGraph', 'LossTerms', 'AnomalyReport'
]
