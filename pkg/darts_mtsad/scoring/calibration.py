# -*- coding: utf-8 -*-
"""
Robust per-channel score standardization.

Example:
    >>> calibration = Calibration.fit(np.array([[1.0], [2.0], [3.0], [4.0], [5.0]]))
    >>> calibration.median(), calibration.iqr()
    (array([3.]), array([2.]))
    >>> calibration.apply(np.array([[7.0]]))
    array([[2.]])
"""
import numpy as np

from darts_mtsad.result.errors import DimensionError


IQR_FLOOR = 1e-3


class Calibration:
    """
    Channel medians and interquartile ranges of validation errors.

    A raw score r of channel n maps to (r - median[n]) / iqr[n]; ranges
    below 1e-3 are raised to 1e-3.
    """

    def __init__(self, median, iqr):
        """
        Create a Calibration.

        Args:
            median: N medians
            iqr: N interquartile ranges, floored at 1e-3
        """
        self._median = np.asarray(median, dtype=np.float64).reshape(-1)
        self._iqr = np.maximum(np.asarray(iqr, dtype=np.float64).reshape(-1), IQR_FLOOR)

    @staticmethod
    def fit(raw):
        """
        Estimate statistics from raw validation scores.

        Args:
            raw: M x N nonnegative scores

        Returns:
            Calibration
        """
        raw = np.asarray(raw, dtype=np.float64)
        q1, median, q3 = np.percentile(raw, [25.0, 50.0, 75.0], axis=0)
        return Calibration(median, q3 - q1)

    def median(self):
        return self._median

    def iqr(self):
        return self._iqr

    def width(self):
        return self._median.shape[0]

    def apply(self, raw):
        """
        Standardize raw scores.

        Args:
            raw: M x N raw scores

        Returns:
            M x N standardized scores

        Raises:
            DimensionError: If the channel count differs
        """
        raw = np.asarray(raw, dtype=np.float64)
        if raw.shape[-1] != self.width():
            raise DimensionError(
                "Calibration channel count differs",
                {"expected": self.width(), "actual": raw.shape[-1]}
            )
        return (raw - self._median) / self._iqr

    def __eq__(self, other):
        if not isinstance(other, Calibration):
            return False
        return (np.array_equal(self._median, other._median)
                and np.array_equal(self._iqr, other._iqr))

    def __repr__(self):
        return "Calibration(channels=%d)" % self.width()
