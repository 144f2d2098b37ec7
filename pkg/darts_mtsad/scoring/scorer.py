# -*- coding: utf-8 -*-
"""
Prediction-error anomaly scores.

Each sample predicts the w steps after its window. The squared error at
timestep t and channel n is averaged over every prediction that covers
t, standardized with the validation calibration, and the global score
is the maximum over channels. Timesteps before h + w have no prediction
and score 0 in written files; metrics skip them.

Example:
    >>> scores = Scorer(model, batch=64).score(test)
    >>> scores.start()
    330
    >>> scores.global_scores().shape
    (9670,)
"""
import logging

import numpy as np

from darts_mtsad.data.windows import make_samples
from darts_mtsad.result.errors import ContractError
from darts_mtsad.scoring.calibration import Calibration


_log = logging.getLogger(__name__)


class ChannelScores:
    """
    Calibrated channel scores and their maximum from timestep `start` on.

    Example:
        >>> ChannelScores(np.array([[0.5, 2.0]]), 330).global_scores()
        array([2.])
    """

    def __init__(self, channel, start, raw=None):
        """
        Create ChannelScores.

        Args:
            channel: L' x N calibrated scores
            start: Index of the first scored timestep
            raw: Optional L' x N uncalibrated squared errors
        """
        self._channel = np.asarray(channel, dtype=np.float64)
        self._global = self._channel.max(axis=1)
        self._start = int(start)
        self._raw = raw

    def channel(self):
        return self._channel

    def global_scores(self):
        return self._global

    def start(self):
        return self._start

    def raw(self):
        return self._raw

    def length(self):
        return self._channel.shape[0]

    def timesteps(self):
        """
        Get the series index of every scored row.

        Returns:
            Integer array of L' timesteps
        """
        return np.arange(self._start, self._start + self.length())

    def padded(self):
        """
        Extend the scores back to timestep 0.

        Rows before `start` have no prediction and score 0.

        Returns:
            ChannelScores starting at 0
        """
        lead = np.zeros((self._start, self._channel.shape[1]))
        raw = None if self._raw is None else np.vstack([lead, self._raw])
        return ChannelScores(np.vstack([lead, self._channel]), 0, raw)

    def span(self, begin, end):
        """
        Select scored rows by series timestep.

        Args:
            begin: First timestep, inclusive
            end: Last timestep, exclusive

        Returns:
            ChannelScores over the overlap
        """
        first = max(begin, self._start) - self._start
        last = max(min(end, self._start + self.length()) - self._start, first)
        raw = None if self._raw is None else self._raw[first:last]
        return ChannelScores(self._channel[first:last], self._start + first, raw)

    def __repr__(self):
        return "ChannelScores(rows=%d, channels=%d, start=%d)" % (
            self.length(), self._channel.shape[1], self._start
        )


def window_errors(model, samples, batch):
    """
    Squared prediction errors of every sample.

    Args:
        model: DartsModel
        samples: SampleSet
        batch: Samples per forward pass

    Returns:
        count x N x w array
    """
    rng = np.random.default_rng(0)
    parts = []
    for start in range(0, samples.count(), batch):
        positions = np.arange(start, min(start + batch, samples.count()))
        history, window, target = samples.batch(positions)
        out = model.forward(history, window, rng, training=False)
        predicted = np.transpose(out.prediction().values()[..., 0], (0, 2, 1))
        parts.append(np.square(predicted.astype(np.float64) - target))
    return np.concatenate(parts, axis=0)


def dense_errors(errors, origins, window, length):
    """
    Average window errors over the predictions covering each timestep.

    Args:
        errors: count x N x w squared errors
        origins: Sample origins, prediction k covers origin + w + k
        window: w
        length: Series length L

    Returns:
        Tuple (L x N averaged errors, L coverage counts)
    """
    channels = errors.shape[1]
    total = np.zeros((length, channels))
    cover = np.zeros(length)
    steps = np.asarray(origins)[:, None] + window + np.arange(window)
    for k in range(window):
        np.add.at(total, steps[:, k], errors[:, :, k])
        np.add.at(cover, steps[:, k], 1.0)
    covered = cover > 0
    total[covered] /= cover[covered][:, None]
    return total, cover


def fit_calibration(model, samples, batch=64):
    """
    Calibrate scores on held-out samples and attach the result to the model.

    Errors are averaged over the predictions covering each timestep, as
    in scoring, before the statistics are taken.

    Args:
        model: Fitted DartsModel
        samples: Validation SampleSet
        batch: Samples per forward pass

    Returns:
        Calibration
    """
    errors = window_errors(model, samples, batch)
    dense, cover = dense_errors(errors, samples.origins(), samples.window(), samples.length())
    raw = dense[cover > 0]
    calibration = Calibration.fit(raw)
    _log.debug("Calibration medians %s", np.array2string(calibration.median(), precision=4))
    model.calibrate(calibration)
    return calibration


class Scorer:
    """
    Dense stride-1 scorer of a fitted and calibrated model.

    Example:
        >>> Scorer(model).score(test).channel().shape
        (9670, 51)
    """

    def __init__(self, model, batch=64):
        """
        Create a Scorer.

        Args:
            model: DartsModel
            batch: Samples per forward pass
        """
        self._model = model
        self._batch = int(batch)

    def score(self, dataset):
        """
        Score a standardized series.

        Args:
            dataset: TimeSeriesDataset standardized with the training statistics

        Returns:
            ChannelScores starting at h + w

        Raises:
            ContractError: If the model is not fitted or not calibrated
            InsufficientDataError: If the series is shorter than h + 2w
        """
        model = self._model
        if not model.fitted():
            raise ContractError("Model has not been trained", {})
        calibration = model.calibration().fold(
            lambda: _missing_calibration(), lambda c: c
        )
        arch = model.architecture()
        samples = make_samples(dataset, arch.window(), arch.history(), 1)
        errors = window_errors(model, samples, self._batch)
        dense, _ = dense_errors(errors, samples.origins(), arch.window(), dataset.length())
        start = arch.history() + arch.window()
        raw = dense[start:]
        _log.info("Scored %d timesteps from %d", raw.shape[0], start)
        return ChannelScores(calibration.apply(raw), start, raw)

    def __repr__(self):
        return "Scorer(%r, batch=%d)" % (self._model, self._batch)


def _missing_calibration():
    raise ContractError("Model has no score calibration", {})
