# -*- coding: utf-8 -*-
"""
Synthetic multichannel series with labeled anomaly segments.

Channels are sparse mixtures of a few latent drivers (sinusoids and
AR(1) processes) plus per-channel noise. The test split carries spike,
level-shift and correlation-break segments.

Example:
    >>> bundle = generate_synthetic(8, 4000, AnomalySpec(0.06), np.random.default_rng(0),
    ...                             window=10, history=100)
    >>> round(bundle.test().anomaly_ratio(), 2)
    0.06
    >>> bundle.mixing().shape
    (8, 4)
"""
import logging

import numpy as np

from darts_mtsad.domain.dataset import TimeSeriesDataset
from darts_mtsad.result.errors import InsufficientDataError, ParameterError


_log = logging.getLogger(__name__)

KINDS = ("spike", "level-shift", "correlation-break")


class AnomalySpec:
    """
    Requested anomaly content of the test split.

    ``segments`` of None picks a count from the ratio; 0 requests a clean
    test split with all-zero labels.

    Example:
        >>> AnomalySpec(0.06, ["spike"]).kinds()
        ('spike',)
        >>> AnomalySpec(0.7)
        Traceback (most recent call last):
        ...
        ParameterError: Anomaly ratio outside (0, 0.5) (ratio=0.7)
    """

    def __init__(self, ratio=0.06, kinds=KINDS, segments=None):
        """
        Create an AnomalySpec.

        Args:
            ratio: Labeled fraction in (0, 0.5)
            kinds: Anomaly kinds to cycle through
            segments: Optional segment count

        Raises:
            ParameterError: If ratio, kinds or segments are invalid
        """
        kinds = tuple(kinds)
        if segments is not None and segments < 0:
            raise ParameterError("Segment count must be non-negative", {"segments": segments})
        if segments != 0 and not 0 < ratio < 0.5:
            raise ParameterError("Anomaly ratio outside (0, 0.5)", {"ratio": ratio})
        unknown = [k for k in kinds if k not in KINDS]
        if unknown or not kinds:
            raise ParameterError("Unknown anomaly kind", {"kinds": list(kinds)})
        self._ratio = float(ratio)
        self._kinds = kinds
        self._segments = segments

    def ratio(self):
        return self._ratio

    def kinds(self):
        return self._kinds

    def segments(self):
        return self._segments

    def __repr__(self):
        return "AnomalySpec(ratio=%.4g, kinds=%r, segments=%r)" % (
            self._ratio, self._kinds, self._segments
        )


class SyntheticBundle:
    """
    Train and test splits with the ground-truth mixing matrix.

    Example:
        >>> bundle.train().labels().is_present()
        False
    """

    def __init__(self, train, test, mixing):
        self._train = train
        self._test = test
        self._mixing = mixing

    def train(self):
        return self._train

    def test(self):
        return self._test

    def mixing(self):
        """
        Get the channel-by-driver mixing weights.

        Returns:
            N x drivers array, zero where a channel ignores a driver
        """
        return self._mixing

    def __repr__(self):
        return "SyntheticBundle(train=%r, test=%r)" % (self._train, self._test)


def generate_synthetic(n_channels, length, spec, rng, drivers=4, window=30,
                       history=300, noise=0.1):
    """
    Generate train and test splits of equal length.

    Args:
        n_channels: Channel count N >= 2
        length: Steps per split, at least 10 * (history + 2 * window)
        spec: AnomalySpec for the test split
        rng: numpy.random.Generator
        drivers: Number of latent drivers
        window: Short window w used by the detector
        history: History length h used by the detector
        noise: Per-channel noise std relative to unit-scale drivers

    Returns:
        SyntheticBundle

    Raises:
        ParameterError: If n_channels < 2 or drivers < 1
        InsufficientDataError: If length is too short
    """
    if n_channels < 2:
        raise ParameterError("At least two channels required", {"channels": n_channels})
    if drivers < 1:
        raise ParameterError("At least one driver required", {"drivers": drivers})
    minimum = 10 * (history + 2 * window)
    if length < minimum:
        raise InsufficientDataError(
            "Synthetic series too short",
            {"length": length, "minimum": minimum}
        )
    mixing = _mixing(n_channels, drivers, rng)
    latent = _drivers(drivers, 2 * length, rng)
    values = latent @ mixing.T + noise * rng.standard_normal((2 * length, n_channels))
    names = ["ch-%03d" % n for n in range(n_channels)]
    train = TimeSeriesDataset(values[:length], names)
    test = values[length:].copy()
    labels = np.zeros(length, dtype=bool)
    for start, stop, kind in _segments(spec, length, window, history, rng):
        _inject(test, latent[length:], mixing, start, stop, kind, rng)
        labels[start:stop] = True
    _log.info(
        "Generated %d channels x %d steps, test anomaly ratio %.4f",
        n_channels, length, labels.mean()
    )
    return SyntheticBundle(train, TimeSeriesDataset(test, names, labels), mixing)


def _mixing(channels, drivers, rng):
    """Each channel draws on one or two drivers with weights of magnitude 0.5 to 1.5."""
    mixing = np.zeros((channels, drivers))
    for n in range(channels):
        count = 1 if drivers == 1 else int(rng.integers(1, 3))
        chosen = rng.choice(drivers, size=count, replace=False)
        signs = rng.choice([-1.0, 1.0], size=count)
        mixing[n, chosen] = signs * rng.uniform(0.5, 1.5, size=count)
    return mixing


def _drivers(count, steps, rng):
    latent = np.zeros((steps, count))
    t = np.arange(steps)
    for k in range(count):
        if k % 2 == 0:
            period = rng.uniform(20.0, 200.0)
            latent[:, k] = np.sin(2.0 * np.pi * t / period + rng.uniform(0, 2 * np.pi))
        else:
            shocks = rng.standard_normal(steps) * np.sqrt(1.0 - 0.95 ** 2)
            series = np.zeros(steps)
            for i in range(1, steps):
                series[i] = 0.95 * series[i - 1] + shocks[i]
            latent[:, k] = series
    return latent


def _segments(spec, length, window, history, rng):
    """
    Place disjoint segments after the first h + w steps.

    The labeled total equals round(ratio * length); one segment sits at a
    random offset inside each of ``count`` equal slots.
    """
    if spec.segments() == 0:
        return []
    target = int(round(spec.ratio() * length))
    count = spec.segments() or max(1, target // 40)
    if target < count:
        raise ParameterError(
            "Too many segments for the anomaly ratio",
            {"segments": count, "labeled": target}
        )
    start = history + window
    slot = (length - start) // count
    sizes = np.full(count, target // count)
    sizes[:target % count] += 1
    if sizes.max() >= slot:
        raise ParameterError(
            "Anomaly segments do not fit the series",
            {"segments": count, "size": int(sizes.max()), "slot": slot}
        )
    placed = []
    for k in range(count):
        begin = start + k * slot + int(rng.integers(0, slot - sizes[k]))
        placed.append((begin, begin + int(sizes[k]), spec.kinds()[k % len(spec.kinds())]))
    return placed


def _inject(values, latent, mixing, start, stop, kind, rng):
    channels = values.shape[1]
    spread = values.std(axis=0)
    affected = rng.choice(channels, size=max(1, channels // 10), replace=False)
    if kind == "spike":
        signs = rng.choice([-1.0, 1.0], size=(stop - start, affected.size))
        values[start:stop, affected] += signs * rng.uniform(3.0, 6.0) * spread[affected]
    elif kind == "level-shift":
        signs = rng.choice([-1.0, 1.0], size=affected.size)
        values[start:stop, affected] += signs * rng.uniform(2.0, 4.0) * spread[affected]
    else:
        # flip the driver contribution; the channels stay in range but lose their partners
        values[start:stop, affected] -= 2.0 * latent[start:stop] @ mixing[affected].T
