# -*- coding: utf-8 -*-
"""
Sliding-window sample construction.

Sample origins run i = h, h + s, h + 2s, ... while i + 2w - 1 < L, so a
series of length L yields floor((L - h - 2w) / s) + 1 samples.

Example:
    >>> samples = make_samples(dataset, 30, 300, 5)
    >>> samples.count(), samples.origins()[0]
    (129, 300)
"""
import numpy as np

from darts_mtsad.domain.sample import TrainingSample
from darts_mtsad.result.errors import (
    ConfigurationError, ContractError, InsufficientDataError
)


def sample_count(length, window, history, stride):
    """
    Count samples without building them.

    Args:
        length: Series length L
        window: Short window w
        history: History length h
        stride: Step s

    Returns:
        Number of samples, 0 when the series is too short
    """
    span = length - history - 2 * window
    if span < 0:
        return 0
    return span // stride + 1


def make_samples(dataset, window, history, stride):
    """
    Cut a dataset into (history, window, target) samples.

    Args:
        dataset: TimeSeriesDataset
        window: Short window w >= 1
        history: History length h, a multiple of w
        stride: Step s >= 1

    Returns:
        SampleSet

    Raises:
        ConfigurationError: If h is not a positive multiple of w or s < 1
        InsufficientDataError: If L < h + 2w
    """
    if window < 1 or stride < 1 or history < window or history % window:
        raise ConfigurationError(
            "History must be a positive multiple of the window",
            {"window": window, "history": history, "stride": stride}
        )
    minimum = history + 2 * window
    if dataset.length() < minimum:
        raise InsufficientDataError(
            "Series too short for windowing",
            {"length": dataset.length(), "minimum": minimum}
        )
    count = sample_count(dataset.length(), window, history, stride)
    origins = history + stride * np.arange(count)
    return SampleSet(dataset.values().T, origins, window, history)


class SampleSet:
    """
    Lazily sliced samples over one channel-major series.

    Example:
        >>> history, window, target = samples.batch([0, 1])
        >>> history.shape
        (2, 51, 300)
    """

    def __init__(self, series, origins, window, history):
        """
        Create a SampleSet.

        Args:
            series: N x L array
            origins: Sample origin indices
            window: Short window w
            history: History length h
        """
        self._series = series
        self._origins = np.asarray(origins, dtype=np.int64)
        self._window = int(window)
        self._history = int(history)

    def count(self):
        return int(self._origins.shape[0])

    def origins(self):
        return self._origins.copy()

    def window(self):
        return self._window

    def history(self):
        return self._history

    def channels(self):
        return self._series.shape[0]

    def length(self):
        return self._series.shape[1]

    def sample(self, position):
        """
        Build one TrainingSample.

        Args:
            position: Index into this set

        Returns:
            TrainingSample
        """
        history, window, target = self.batch([position])
        return TrainingSample(
            history[0], window[0], target[0], int(self._origins[position])
        )

    def batch(self, positions):
        """
        Slice a batch of samples.

        Args:
            positions: Indices into this set

        Returns:
            Tuple of arrays (B x N x h, B x N x w, B x N x w)
        """
        origins = self._origins[np.asarray(positions, dtype=np.int64)]
        if origins.size == 0:
            raise ContractError("Empty sample batch", {})
        past = origins[:, None] + np.arange(-self._history, 0)
        now = origins[:, None] + np.arange(self._window)
        future = now + self._window
        series = self._series
        return (
            np.transpose(series[:, past], (1, 0, 2)),
            np.transpose(series[:, now], (1, 0, 2)),
            np.transpose(series[:, future], (1, 0, 2)),
        )

    def subset(self, positions):
        """
        Select samples by position.

        Args:
            positions: Indices into this set

        Returns:
            SampleSet over the same series
        """
        return SampleSet(
            self._series, self._origins[np.asarray(positions, dtype=np.int64)],
            self._window, self._history
        )

    def split(self, fraction):
        """
        Hold out the last fraction of samples.

        Args:
            fraction: Held-out share in (0, 1)

        Returns:
            Tuple (fitting SampleSet, held-out SampleSet)

        Raises:
            ContractError: If either part would be empty
        """
        held = int(round(self.count() * fraction))
        held = max(held, 1)
        if held >= self.count():
            raise ContractError(
                "Too few samples for a validation split",
                {"samples": self.count(), "fraction": fraction}
            )
        cut = self.count() - held
        return self.subset(np.arange(cut)), self.subset(np.arange(cut, self.count()))

    def __repr__(self):
        return "SampleSet(count=%d, w=%d, h=%d)" % (
            self.count(), self._window, self._history
        )
