# -*- coding: utf-8 -*-
"""
Tests for SoftFusion.
"""
import logging
import unittest

import numpy as np

from darts_mtsad.model.architecture import Architecture
from darts_mtsad.model.fusion import SoftFusion
from darts_mtsad.model.state import ParameterSet
from darts_mtsad.result.errors import DimensionError
from darts_mtsad.tensor.tensor import Tensor

logging.disable(logging.CRITICAL)


def _fusion(**changes):
    fields = dict(channels=3, window=6, history=24, latent=8, heads=1, key_dim=5,
                  priors=(0.9,), precision="float64")
    fields.update(changes)
    arch = Architecture(**fields)
    return SoftFusion(ParameterSet(arch.dtype()), arch, np.random.default_rng(0))


def _inputs():
    rng = np.random.default_rng(4)
    return Tensor(rng.standard_normal((2, 3, 8, 6))), Tensor(rng.standard_normal((2, 3, 8, 4)))


class TestSoftFusion(unittest.TestCase):
    """Tests for SoftFusion."""

    def test_align_moves_time_to_second_axis(self):
        short, context = _fusion().align(*_inputs())
        self.assertEqual(
            (short.shape(), context.shape()), ((2, 6, 3, 8), (2, 4, 3, 8)),
            "Aligned embeddings should be B x time x N x d"
        )

    def test_align_rejects_channel_mismatch(self):
        short, _ = _inputs()
        with self.assertRaises(DimensionError, msg="Mismatched channel counts should be rejected"):
            _fusion().align(short, Tensor(np.zeros((2, 4, 8, 4))))

    def test_attention_rows_sum_to_one(self):
        fusion = _fusion()
        fused, weights = fusion.cross_attend(*fusion.align(*_inputs()))
        rows = weights.otherwise(None).values()
        self.assertEqual(rows.shape, (2, 3, 6, 4), "Weights should be B x N x w x T")
        self.assertTrue(np.allclose(rows.sum(axis=-1), 1.0, atol=1e-6), "Attention rows should sum to 1")
        self.assertEqual(fused.shape(), (2, 6, 3, 8), "Fused features should keep the window layout")

    def test_attention_is_per_channel(self):
        fusion = _fusion()
        short, context = _inputs()
        changed = context.values().copy()
        changed[:, 2] += 5.0
        first = fusion.cross_attend(*fusion.align(short, context))[0].values()
        second = fusion.cross_attend(*fusion.align(short, Tensor(changed)))[0].values()
        self.assertTrue(
            np.allclose(first[:, :, :2], second[:, :, :2]),
            "Changing one channel's context should not move other channels"
        )

    def test_disabled_attention_uses_value_projection(self):
        fusion = _fusion(disable_fusion_attention=True)
        fused, weights = fusion.cross_attend(*fusion.align(*_inputs()))
        self.assertFalse(weights.is_present(), "No weights should exist without attention")
        self.assertEqual(fused.shape(), (2, 6, 3, 8), "Value projection should keep the layout")

    def test_missing_context_skips_attention(self):
        fusion = _fusion()
        short, context = fusion.align(_inputs()[0], None)
        self.assertIsNone(context, "No long path should give no context")
        self.assertFalse(fusion.cross_attend(short, None)[1].is_present(), "No weights without context")

    def test_predict_emits_next_window(self):
        fusion = _fusion()
        fused, _ = fusion.cross_attend(*fusion.align(*_inputs()))
        self.assertEqual(fusion.predict(fused).shape(), (2, 6, 3, 1), "Prediction should be B x w x N x 1")


if __name__ == "__main__":
    unittest.main()
