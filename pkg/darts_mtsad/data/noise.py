# -*- coding: utf-8 -*-
"""
Gaussian-noise corruption for robustness runs.

Example:
    >>> noisy = inject_noise(dataset, 0.5, np.random.default_rng(0))
    >>> noisy.labels() == dataset.labels()
    True
"""
import logging

import numpy as np

from darts_mtsad.result.errors import ParameterError


_log = logging.getLogger(__name__)


def inject_noise(dataset, ratio, rng):
    """
    Add zero-mean Gaussian noise scaled to each channel's spread.

    Each cell of channel n receives noise with standard deviation
    ratio * std(channel n); labels are kept.

    Args:
        dataset: TimeSeriesDataset
        ratio: Non-negative multiple of the channel std
        rng: numpy.random.Generator

    Returns:
        Corrupted TimeSeriesDataset

    Raises:
        ParameterError: If ratio is negative
    """
    if not ratio >= 0:
        raise ParameterError("Noise ratio must be non-negative", {"ratio": ratio})
    if ratio == 0:
        return dataset
    values = dataset.values()
    scale = ratio * values.std(axis=0)
    noise = rng.standard_normal(values.shape) * scale
    _log.info("Injected noise at ratio %.3g over %d channels", ratio, dataset.width())
    return dataset.with_values(values + noise)
