# -*- coding: utf-8 -*-
"""
Tests for sliding-window samples.
"""
import logging
import unittest

import numpy as np

from darts_mtsad.data.windows import make_samples, sample_count
from darts_mtsad.domain.dataset import TimeSeriesDataset
from darts_mtsad.result.errors import (
    ConfigurationError, ContractError, InsufficientDataError
)

logging.disable(logging.CRITICAL)


def _ramp(length, channels=2):
    values = np.arange(length, dtype=float)[:, None] + 1000.0 * np.arange(channels)
    return TimeSeriesDataset(values, ["c%d" % n for n in range(channels)])


class TestMakeSamples(unittest.TestCase):
    """Tests for make_samples."""

    def test_make_samples_count_for_reference_lengths(self):
        samples = make_samples(_ramp(1000), 30, 300, 5)
        self.assertEqual(samples.count(), 129, "L=1000, w=30, h=300, s=5 should give 129 samples")
        self.assertEqual(sample_count(1000, 30, 300, 5), 129, "sample_count should agree")

    def test_sample_count_matches_enumeration(self):
        rng = np.random.default_rng(5)
        for _ in range(200):
            window = int(rng.integers(1, 8))
            history = window * int(rng.integers(1, 6))
            stride = int(rng.integers(1, 6))
            length = int(rng.integers(0, 120))
            origins = range(history, length, stride)
            expected = sum(1 for i in origins if i + 2 * window - 1 < length)
            self.assertEqual(
                sample_count(length, window, history, stride), expected,
                "L=%d, w=%d, h=%d, s=%d should count every valid origin" % (length, window, history, stride)
            )

    def test_make_samples_minimum_length_gives_one_sample(self):
        self.assertEqual(
            make_samples(_ramp(360), 30, 300, 5).count(), 1,
            "L = h + 2w should give exactly one sample"
        )

    def test_make_samples_rejects_short_series(self):
        with self.assertRaises(InsufficientDataError, msg="L < h + 2w should be rejected"):
            make_samples(_ramp(359), 30, 300, 5)

    def test_make_samples_rejects_history_not_multiple_of_window(self):
        with self.assertRaises(ConfigurationError, msg="h=100, w=30 should be rejected"):
            make_samples(_ramp(1000), 30, 100, 5)

    def test_sample_slices_are_contiguous(self):
        samples = make_samples(_ramp(200), 10, 50, 7)
        history, window, target = samples.batch([2])
        origin = samples.origins()[2]
        self.assertEqual(origin, 64, "Third origin should be h + 2s")
        self.assertTrue(
            np.array_equal(history[0, 0], np.arange(origin - 50, origin)),
            "History should cover the h steps before the origin"
        )
        self.assertTrue(
            np.array_equal(window[0, 1], 1000.0 + np.arange(origin, origin + 10)),
            "Window should start at the origin"
        )
        self.assertTrue(
            np.array_equal(target[0, 0], np.arange(origin + 10, origin + 20)),
            "Target should follow the window"
        )

    def test_sample_is_channel_major(self):
        sample = make_samples(_ramp(200, 3), 10, 50, 7).sample(0)
        self.assertEqual(sample.window().shape, (3, 10), "Window should be N x w")

    def test_split_holds_out_tail(self):
        fit, held = make_samples(_ramp(1000), 30, 300, 5).split(0.1)
        self.assertEqual((fit.count(), held.count()), (116, 13), "Split should hold out 10 percent")
        self.assertLess(fit.origins()[-1], held.origins()[0], "Held-out samples should come last")

    def test_split_rejects_single_sample(self):
        with self.assertRaises(ContractError, msg="One sample cannot be split"):
            make_samples(_ramp(360), 30, 300, 5).split(0.1)


if __name__ == "__main__":
    unittest.main()
