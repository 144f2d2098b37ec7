# -*- coding: utf-8 -*-
"""
Tests for inject_noise.
"""
import logging
import unittest

import numpy as np

from darts_mtsad.data.noise import inject_noise
from darts_mtsad.domain.dataset import TimeSeriesDataset
from darts_mtsad.result.errors import ParameterError

logging.disable(logging.CRITICAL)


class TestInjectNoise(unittest.TestCase):
    """Tests for inject_noise."""

    def setUp(self):
        rng = np.random.default_rng(0)
        values = rng.standard_normal((5000, 2)) * np.array([1.0, 10.0])
        self.dataset = TimeSeriesDataset(values, ["a", "b"], rng.random(5000) > 0.9)

    def test_inject_noise_zero_ratio_is_identity(self):
        noisy = inject_noise(self.dataset, 0.0, np.random.default_rng(1))
        self.assertTrue(
            np.array_equal(noisy.values(), self.dataset.values()),
            "Ratio 0 should leave values unchanged"
        )

    def test_inject_noise_is_deterministic_per_seed(self):
        first = inject_noise(self.dataset, 0.5, np.random.default_rng(9))
        second = inject_noise(self.dataset, 0.5, np.random.default_rng(9))
        self.assertEqual(first, second, "Equal seeds should give equal corruption")

    def test_inject_noise_scales_with_channel_spread(self):
        noisy = inject_noise(self.dataset, 0.5, np.random.default_rng(2))
        added = (noisy.values() - self.dataset.values()).std(axis=0)
        expected = 0.5 * self.dataset.values().std(axis=0)
        self.assertTrue(
            np.allclose(added, expected, rtol=0.05),
            "Noise std should be ratio times the channel std"
        )

    def test_inject_noise_keeps_labels(self):
        noisy = inject_noise(self.dataset, 0.5, np.random.default_rng(2))
        self.assertTrue(
            np.array_equal(noisy.labels().otherwise(None), self.dataset.labels().otherwise(None)),
            "Labels should survive corruption"
        )

    def test_inject_noise_rejects_negative_ratio(self):
        with self.assertRaises(ParameterError, msg="A negative ratio should be rejected"):
            inject_noise(self.dataset, -0.1, np.random.default_rng(0))


if __name__ == "__main__":
    unittest.main()
