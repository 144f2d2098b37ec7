# -*- coding: utf-8 -*-
"""
Dataset ingestion, standardization, windowing, noise and synthetic data.
"""
from darts_mtsad.data.source import CsvSource, CsvSink
from darts_mtsad.data.scaling import (
    Standardization, standardize, apply_stats, destandardize
)
from darts_mtsad.data.windows import SampleSet, make_samples, sample_count
from darts_mtsad.data.noise import inject_noise
from darts_mtsad.data.synthetic import (
    AnomalySpec, SyntheticBundle, generate_synthetic
)

__all__ = [
    'CsvSource', 'CsvSink', 'Standardization', 'standardize', 'apply_stats',
    'destandardize', 'SampleSet', 'make_samples', 'sample_count',
    'inject_noise', 'AnomalySpec', 'SyntheticBundle', 'generate_synthetic'
]
