# -*- coding: utf-8 -*-
"""
TimeSeriesDataset domain object: an ordered multichannel series.

Example:
    >>> ds = TimeSeriesDataset(np.zeros((3, 2)), ["a", "b"], Some(np.array([0, 1, 0])))
    >>> ds.length(), ds.width()
    (3, 2)
    >>> round(ds.anomaly_ratio(), 4)
    0.3333
"""
import numpy as np

from darts_mtsad.result.errors import FormatError
from darts_mtsad.result.optional import Empty, Some


class TimeSeriesDataset:
    """
    Immutable L x N series with channel names and optional labels.

    Values are held as a read-only float64 copy. Labels, when present,
    are a read-only boolean vector of length L.

    Example:
        >>> ds = TimeSeriesDataset(np.ones((4, 1)), ["flow"])
        >>> ds.labels().is_present()
        False
    """

    def __init__(self, values, names, labels=None, stats=None, constant=None):
        """
        Create a TimeSeriesDataset.

        Args:
            values: Array-like of shape (L, N)
            names: Sequence of N channel names
            labels: Optional[array of L booleans] (None means Empty)
            stats: Optional[Standardization] applied to the values
            constant: Optional boolean flags of channels with zero spread

        Raises:
            FormatError: If shapes disagree or the series is empty
        """
        array = np.array(values, dtype=np.float64)
        if array.ndim != 2 or array.shape[0] < 1 or array.shape[1] < 1:
            raise FormatError("Series must be a non-empty L x N matrix", {"shape": array.shape})
        if len(names) != array.shape[1]:
            raise FormatError(
                "Channel names do not match channel count",
                {"names": len(names), "channels": array.shape[1]}
            )
        labels = labels if labels is not None else Empty()
        if not hasattr(labels, "fold"):
            labels = Some(labels)
        labels = labels.map(lambda v: np.array(v, dtype=bool).reshape(-1))
        if labels.fold(lambda: False, lambda v: len(v) != array.shape[0]):
            raise FormatError(
                "Label count does not match series length",
                {"labels": labels.fold(lambda: 0, len), "length": array.shape[0]}
            )
        array.setflags(write=False)
        labels.fold(lambda: None, lambda v: v.setflags(write=False))
        self._values = array
        self._names = [str(n) for n in names]
        self._labels = labels
        self._stats = stats if stats is not None else Empty()
        self._constant = (
            np.zeros(array.shape[1], dtype=bool) if constant is None
            else np.array(constant, dtype=bool)
        )

    def values(self):
        """
        Get the L x N matrix.

        Returns:
            Read-only float64 array
        """
        return self._values

    def names(self):
        return list(self._names)

    def labels(self):
        """
        Get per-step anomaly labels.

        Returns:
            Optional[read-only bool array of length L]
        """
        return self._labels

    def stats(self):
        """
        Get the standardization applied to these values.

        Returns:
            Optional[Standardization]
        """
        return self._stats

    def constant(self):
        return self._constant.copy()

    def length(self):
        return self._values.shape[0]

    def width(self):
        return self._values.shape[1]

    def anomaly_ratio(self):
        """
        Get the labeled anomaly fraction.

        Returns:
            Fraction in [0, 1], 0 when unlabeled
        """
        return self._labels.fold(lambda: 0.0, lambda v: float(v.mean()))

    def with_values(self, values, stats=None, constant=None):
        """
        Build a dataset with new values and the same names and labels.

        Args:
            values: L x N array
            stats: Optional standardization now applied
            constant: Optional constant-channel flags

        Returns:
            New TimeSeriesDataset
        """
        return TimeSeriesDataset(
            values, self._names, self._labels,
            stats if stats is not None else self._stats,
            constant if constant is not None else self._constant
        )

    def span(self, start, stop):
        """
        Slice a contiguous range of timesteps.

        Args:
            start: First index
            stop: One past the last index

        Returns:
            New TimeSeriesDataset
        """
        return TimeSeriesDataset(
            self._values[start:stop], self._names,
            self._labels.map(lambda v: v[start:stop]),
            self._stats, self._constant
        )

    def __eq__(self, other):
        if not isinstance(other, TimeSeriesDataset):
            return False
        same_labels = self._labels.fold(
            lambda: not other._labels.is_present(),
            lambda v: other._labels.fold(lambda: False, lambda o: np.array_equal(v, o))
        )
        return (
            self._names == other._names and
            np.array_equal(self._values, other._values) and
            same_labels
        )

    def __repr__(self):
        return "TimeSeriesDataset(L=%d, N=%d, labeled=%s)" % (
            self.length(), self.width(), self._labels.is_present()
        )
