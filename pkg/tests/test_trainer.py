# -*- coding: utf-8 -*-
"""
Tests for TrainConfig, History and Trainer.
"""
import logging
import unittest

import numpy as np

from darts_mtsad.data.windows import make_samples
from darts_mtsad.domain.dataset import TimeSeriesDataset
from darts_mtsad.model.architecture import Architecture
from darts_mtsad.model.darts import DartsModel
from darts_mtsad.result.errors import ContractError, ParameterError
from darts_mtsad.train.trainer import EpochRecord, History, TrainConfig, Trainer

logging.disable(logging.CRITICAL)


def _arch():
    return Architecture(channels=3, window=4, history=8, latent=4, heads=1, head_dim=2,
                        priors=(0.9,), receptive_fields=1, precision="float64")


def _samples(length=60):
    t = np.arange(length)[:, None]
    values = np.hstack([np.sin(t / 3.0), np.cos(t / 3.0), np.sin(t / 5.0)])
    values = values + 0.05 * np.random.default_rng(0).standard_normal(values.shape)
    return make_samples(TimeSeriesDataset(values, ["a", "b", "c"]), 4, 8, 2)


def _fit(seed, epochs=3):
    model = DartsModel.create(_arch(), seed)
    return Trainer(TrainConfig(epochs=epochs, batch=8, patience=5)).fit(model, _samples(), seed)


class TestTrainConfig(unittest.TestCase):
    """Tests for TrainConfig."""

    def test_train_config_defaults(self):
        config = TrainConfig()
        self.assertEqual(
            (config.epochs(), config.batch(), config.lr(), config.patience()), (200, 64, 1e-3, 20),
            "Defaults should be 200 epochs, batch 64, lr 1e-3 and patience 20"
        )

    def test_train_config_rejects_zero_batch(self):
        with self.assertRaises(ParameterError, msg="Batch 0 should be rejected"):
            TrainConfig(batch=0)

    def test_train_config_rejects_decay_of_one(self):
        with self.assertRaises(ParameterError, msg="Decay factor 1 should be rejected"):
            TrainConfig(lr_decay=1.0)


class TestHistory(unittest.TestCase):
    """Tests for History."""

    def test_history_rows_follow_columns(self):
        history = History()
        history.append(EpochRecord(0, 2.0, 1.5, 1.4, 1e-3))
        self.assertEqual(history.rows(), [(0, 2.0, 1.5, 1.4, 1e-3)], "Rows should follow COLUMNS")
        self.assertEqual(len(History.COLUMNS), 5, "History should have five columns")


class TestTrainer(unittest.TestCase):
    """Tests for Trainer."""

    def test_trainer_fixed_seed_repeats_history(self):
        first, second = _fit(4), _fit(4)
        self.assertEqual(first.history(), second.history(), "Equal seeds should give equal histories")
        self.assertTrue(
            all(np.array_equal(a, b) for a, b in zip(
                first.model().parameters().snapshot().values(),
                second.model().parameters().snapshot().values()
            )),
            "Equal seeds should give equal parameters"
        )

    def test_trainer_marks_model_fitted(self):
        result = _fit(0, epochs=2)
        self.assertTrue(result.model().fitted(), "A trained model should be fitted")
        self.assertEqual(len(result.history()), 2, "One record per epoch should be kept")

    def test_trainer_holds_out_tail_samples(self):
        result = _fit(0, epochs=1)
        self.assertEqual(result.validation().count(), 2, "Ten percent of 23 samples should be held out")

    def test_trainer_restores_best_epoch(self):
        result = _fit(1, epochs=4)
        losses = [r.val_loss() for r in result.history().records()]
        self.assertEqual(result.best_epoch(), int(np.argmin(losses)), "Best epoch should have the lowest validation loss")
        again, _ = Trainer(TrainConfig(batch=8)).validate(result.model(), result.validation(), 1)
        self.assertAlmostEqual(again, min(losses), places=10, msg="Restored parameters should reproduce the best loss")

    def test_trainer_validation_nll_falls_on_linear_task(self):
        arch = Architecture(channels=1, window=4, history=8, latent=4, heads=1, head_dim=2,
                            priors=(0.9,), receptive_fields=1, precision="float64")
        values = np.sin(np.arange(200) / 4.0)[:, None]
        samples = make_samples(TimeSeriesDataset(values, ["a"]), 4, 8, 2)
        result = Trainer(TrainConfig(epochs=5, batch=8, lr=3e-3)).fit(DartsModel.create(arch, 0), samples, 0)
        nll = [r.val_nll() for r in result.history().records()]
        self.assertEqual(len(nll), 5, "All five epochs should run")
        self.assertTrue(
            all(later < earlier for earlier, later in zip(nll, nll[1:])),
            "Validation NLL should fall every epoch, got %s" % nll
        )

    def test_trainer_rejects_single_sample(self):
        model = DartsModel.create(_arch(), 0)
        with self.assertRaises(ContractError, msg="One sample cannot be trained on"):
            Trainer(TrainConfig(epochs=1)).fit(model, _samples(length=16), 0)


if __name__ == "__main__":
    unittest.main()
