# -*- coding: utf-8 -*-
"""
TrainingSample domain object: one (history, window, target) triple.

Example:
    >>> sample = TrainingSample(np.zeros((2, 12)), np.zeros((2, 3)), np.ones((2, 3)), 12)
    >>> sample.origin()
    12
    >>> sample.pooled_windows()
    4
"""
import numpy as np

from darts_mtsad.result.errors import DimensionError


class TrainingSample:
    """
    Immutable sample at origin i.

    History P spans [i - h, i - 1], window W spans [i, i + w - 1] and
    target Y spans [i + w, i + 2w - 1]; all are N x length matrices.

    Example:
        >>> s = TrainingSample(np.zeros((1, 6)), np.zeros((1, 2)), np.zeros((1, 2)), 6)
        >>> s.history().shape, s.window().shape
        ((1, 6), (1, 2))
    """

    def __init__(self, history, window, target, origin):
        """
        Create a TrainingSample.

        Args:
            history: N x h array
            window: N x w array
            target: N x w array
            origin: Timestep index i of the window start

        Raises:
            DimensionError: If h is not a multiple of w or channels disagree
        """
        history = np.asarray(history, dtype=np.float64)
        window = np.asarray(window, dtype=np.float64)
        target = np.asarray(target, dtype=np.float64)
        if window.shape != target.shape or history.shape[0] != window.shape[0]:
            raise DimensionError(
                "Sample parts disagree",
                {"history": history.shape, "window": window.shape, "target": target.shape}
            )
        if history.shape[1] < window.shape[1] or history.shape[1] % window.shape[1]:
            raise DimensionError(
                "History must be a multiple of the window",
                {"history": history.shape[1], "window": window.shape[1]}
            )
        self._history = history
        self._window = window
        self._target = target
        self._origin = int(origin)

    def history(self):
        return self._history

    def window(self):
        return self._window

    def target(self):
        return self._target

    def origin(self):
        return self._origin

    def pooled_windows(self):
        """
        Get the count T = h / w of pooled history windows.

        Returns:
            Integer T
        """
        return self._history.shape[1] // self._window.shape[1]

    def __repr__(self):
        return "TrainingSample(origin=%d, N=%d, h=%d, w=%d)" % (
            self._origin, self._window.shape[0],
            self._history.shape[1], self._window.shape[1]
        )
