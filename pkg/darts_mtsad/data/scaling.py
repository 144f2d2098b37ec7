# -*- coding: utf-8 -*-
"""
Per-channel standardization fitted on the training split.

Example:
    >>> train, (test,) = standardize(train_raw, [test_raw])
    >>> train.stats().map(lambda s: s.mean().shape).unwrap()
    (51,)
    >>> destandardize(test) == test_raw
    True
"""
import logging

import numpy as np

from darts_mtsad.domain.dataset import TimeSeriesDataset
from darts_mtsad.result.errors import ContractError, DimensionError
from darts_mtsad.result.optional import Some


_log = logging.getLogger(__name__)

CONSTANT_STD = 1e-8


class Standardization:
    """
    Channel means and scales.

    Channels whose standard deviation falls below 1e-8 are constant:
    they are centered but scaled by 1.

    Example:
        >>> s = Standardization.fit(np.array([[2.0, 5.0], [4.0, 5.0]]))
        >>> s.apply(np.array([[2.0, 5.0]]))
        array([[-1.,  0.]])
        >>> s.constant().tolist()
        [False, True]
    """

    def __init__(self, mean, std, constant):
        """
        Create a Standardization.

        Args:
            mean: Per-channel means
            std: Per-channel scales (1 where constant)
            constant: Per-channel constant flags
        """
        self._mean = np.asarray(mean, dtype=np.float64)
        self._std = np.asarray(std, dtype=np.float64)
        self._constant = np.asarray(constant, dtype=bool)

    @staticmethod
    def fit(values):
        """
        Estimate statistics from an L x N matrix.

        Args:
            values: Training values

        Returns:
            Standardization
        """
        mean = values.mean(axis=0)
        std = values.std(axis=0)
        constant = std < CONSTANT_STD
        return Standardization(mean, np.where(constant, 1.0, std), constant)

    def mean(self):
        return self._mean

    def std(self):
        return self._std

    def constant(self):
        return self._constant

    def width(self):
        return self._mean.shape[0]

    def apply(self, values):
        """
        Shift and scale values.

        Args:
            values: L x N array

        Returns:
            Standardized L x N array

        Raises:
            DimensionError: If the channel count differs
        """
        self._check(values)
        return (values - self._mean) / self._std

    def invert(self, values):
        self._check(values)
        return values * self._std + self._mean

    def _check(self, values):
        if values.shape[-1] != self.width():
            raise DimensionError(
                "Channel count differs from fitted statistics",
                {"channels": values.shape[-1], "fitted": self.width()}
            )

    def __eq__(self, other):
        if not isinstance(other, Standardization):
            return False
        return (
            np.array_equal(self._mean, other._mean) and
            np.array_equal(self._std, other._std) and
            np.array_equal(self._constant, other._constant)
        )

    def __repr__(self):
        return "Standardization(N=%d, constant=%d)" % (
            self.width(), int(self._constant.sum())
        )


def standardize(train, others, stats=None):
    """
    Scale a training dataset and companions by training statistics.

    Args:
        train: TimeSeriesDataset the statistics come from
        others: List of TimeSeriesDataset scaled with the same statistics
        stats: Optional fitted Standardization to reuse instead of fitting

    Returns:
        Tuple (standardized train, list of standardized others)
    """
    stats = stats if stats is not None else Standardization.fit(train.values())
    _log.debug("Standardization: %r", stats)
    return (
        _scaled(train, stats),
        [_scaled(ds, stats) for ds in others],
    )


def apply_stats(dataset, stats):
    """
    Scale one dataset by already fitted statistics.

    Args:
        dataset: TimeSeriesDataset in raw units
        stats: Standardization

    Returns:
        Standardized TimeSeriesDataset
    """
    return _scaled(dataset, stats)


def destandardize(dataset):
    """
    Map a standardized dataset back to raw units.

    Args:
        dataset: TimeSeriesDataset carrying its statistics

    Returns:
        TimeSeriesDataset without statistics

    Raises:
        ContractError: If the dataset is not standardized
    """
    if not dataset.stats().is_present():
        raise ContractError("Dataset is not standardized", {})
    stats = dataset.stats().otherwise(None)
    return TimeSeriesDataset(
        stats.invert(dataset.values()), dataset.names(), dataset.labels()
    )


def _scaled(dataset, stats):
    return dataset.with_values(
        stats.apply(dataset.values()), Some(stats), stats.constant()
    )
