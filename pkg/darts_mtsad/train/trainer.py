# -*- coding: utf-8 -*-
"""
Mini-batch training loop with validation, plateau decay and early stopping.

Example:
    >>> result = Trainer(TrainConfig(epochs=5, batch=16)).fit(model, samples, seed=0)
    >>> result.history().records()[-1].epoch()
    4
    >>> result.model().fitted()
    True
"""
import logging

import numpy as np

from darts_mtsad.result.errors import ContractError, ParameterError
from darts_mtsad.tensor.tape import GradientTape
from darts_mtsad.train.optimizer import Adam, clip_global_norm
from darts_mtsad.train.schedule import EarlyStopping, PlateauSchedule


_log = logging.getLogger(__name__)


class TrainConfig:
    """
    Optimization settings of one training run.

    Example:
        >>> TrainConfig().epochs(), TrainConfig().batch()
        (200, 64)
    """

    def __init__(self, epochs=200, batch=64, grad_clip=1.0, lr=1e-3, lr_decay=0.8,
                 plateau=5, min_lr=1e-6, patience=20, weight_decay=1e-4,
                 validation=0.1):
        """
        Create a TrainConfig.

        Args:
            epochs: Maximum epoch count
            batch: Mini-batch size
            grad_clip: Global gradient norm bound
            lr: Initial learning rate
            lr_decay: Plateau decay factor
            plateau: Epochs without improvement before a decay
            min_lr: Learning rate floor
            patience: Early stopping patience
            weight_decay: L2 coefficient
            validation: Held-out share of the samples

        Raises:
            ParameterError: If a value is out of range
        """
        for name, value in (("epochs", epochs), ("batch", batch),
                            ("plateau", plateau), ("patience", patience)):
            if int(value) != value or value < 1:
                raise ParameterError("Must be a positive integer", {name: value})
        for name, value in (("grad_clip", grad_clip), ("lr", lr)):
            if not value > 0:
                raise ParameterError("Must be positive", {name: value})
        if not 0 < lr_decay < 1:
            raise ParameterError("Decay factor must lie in (0, 1)", {"lr_decay": lr_decay})
        if not 0 < validation < 1:
            raise ParameterError("Validation share must lie in (0, 1)", {"validation": validation})
        if min_lr < 0 or weight_decay < 0:
            raise ParameterError(
                "Must not be negative", {"min_lr": min_lr, "weight_decay": weight_decay}
            )
        self._values = {
            "epochs": int(epochs), "batch": int(batch), "grad_clip": float(grad_clip),
            "lr": float(lr), "lr_decay": float(lr_decay), "plateau": int(plateau),
            "min_lr": float(min_lr), "patience": int(patience),
            "weight_decay": float(weight_decay), "validation": float(validation),
        }

    def epochs(self):
        return self._values["epochs"]

    def batch(self):
        return self._values["batch"]

    def grad_clip(self):
        return self._values["grad_clip"]

    def lr(self):
        return self._values["lr"]

    def lr_decay(self):
        return self._values["lr_decay"]

    def plateau(self):
        return self._values["plateau"]

    def min_lr(self):
        return self._values["min_lr"]

    def patience(self):
        return self._values["patience"]

    def weight_decay(self):
        return self._values["weight_decay"]

    def validation(self):
        return self._values["validation"]

    def json(self):
        return dict(self._values)

    def __eq__(self, other):
        if not isinstance(other, TrainConfig):
            return False
        return self._values == other._values

    def __repr__(self):
        return "TrainConfig(epochs=%d, batch=%d, lr=%g)" % (
            self.epochs(), self.batch(), self.lr()
        )


class EpochRecord:
    """
    Losses and learning rate of one finished epoch.
    """

    def __init__(self, epoch, train_loss, val_loss, val_nll, lr):
        self._epoch = int(epoch)
        self._train = float(train_loss)
        self._val = float(val_loss)
        self._val_nll = float(val_nll)
        self._lr = float(lr)

    def epoch(self):
        return self._epoch

    def train_loss(self):
        return self._train

    def val_loss(self):
        return self._val

    def val_nll(self):
        return self._val_nll

    def lr(self):
        return self._lr

    def row(self):
        """
        Get the record as a history row.

        Returns:
            Tuple (epoch, train_loss, val_loss, val_nll, lr)
        """
        return (self._epoch, self._train, self._val, self._val_nll, self._lr)

    def __eq__(self, other):
        if not isinstance(other, EpochRecord):
            return False
        return self.row() == other.row()

    def __repr__(self):
        return "EpochRecord(%d, train=%.6g, val=%.6g, lr=%g)" % (
            self._epoch, self._train, self._val, self._lr
        )


class History:
    """
    Ordered epoch records of one run.

    Example:
        >>> history = History()
        >>> history.append(EpochRecord(0, 2.0, 1.5, 1.4, 1e-3))
        >>> len(history)
        1
    """

    COLUMNS = ("epoch", "train_loss", "val_loss", "val_nll", "lr")

    def __init__(self, records=None):
        self._records = list(records or [])

    def append(self, record):
        self._records.append(record)

    def records(self):
        return list(self._records)

    def rows(self):
        return [r.row() for r in self._records]

    def __len__(self):
        return len(self._records)

    def __eq__(self, other):
        if not isinstance(other, History):
            return False
        return self._records == other._records


class FitResult:
    """
    Trained model, its loss history, best epoch and validation samples.
    """

    def __init__(self, model, history, best_epoch, validation):
        self._model = model
        self._history = history
        self._best_epoch = best_epoch
        self._validation = validation

    def model(self):
        return self._model

    def history(self):
        return self._history

    def best_epoch(self):
        return self._best_epoch

    def validation(self):
        """
        Get the held-out samples used for model selection.

        Returns:
            SampleSet
        """
        return self._validation


class Trainer:
    """
    Fit a model on a SampleSet.

    The last share of samples is held out for validation. Every epoch
    shuffles the fitting samples with a generator seeded from the run
    seed, so a fixed seed reproduces the loss history. The parameters
    of the best validation epoch are restored at the end.

    Example:
        >>> trainer = Trainer(TrainConfig(epochs=1))
        >>> trainer.fit(model, samples, seed=3).best_epoch()
        0
    """

    def __init__(self, config):
        """
        Create a Trainer.

        Args:
            config: TrainConfig
        """
        self._config = config

    def config(self):
        return self._config

    def fit(self, model, samples, seed):
        """
        Train a model in place.

        Args:
            model: DartsModel
            samples: SampleSet of training samples
            seed: Integer seed of shuffling and graph sampling

        Returns:
            FitResult

        Raises:
            ContractError: If there are too few samples to split
            NumericError: If a loss term becomes NaN or infinite
        """
        if samples.count() < 2:
            raise ContractError("Training needs at least two samples", {"samples": samples.count()})
        config = self._config
        fitting, held = samples.split(config.validation())
        params = model.parameters()
        adam = Adam(params.tensors(), lr=config.lr(), weight_decay=config.weight_decay())
        schedule = PlateauSchedule(config.lr(), config.lr_decay(), config.plateau(), config.min_lr())
        stopping = EarlyStopping(config.patience())
        rng = np.random.default_rng(seed)
        history = History()
        best = params.snapshot()
        _log.info(
            "Training %d samples, validating %d, seed %d", fitting.count(), held.count(), seed
        )
        for epoch in range(config.epochs()):
            train_loss = self._epoch(model, fitting, adam, rng)
            val_loss, val_nll = self.validate(model, held, seed)
            history.append(EpochRecord(epoch, train_loss, val_loss, val_nll, adam.lr()))
            _log.info(
                "Epoch %d train %.6f validation %.6f lr %g", epoch, train_loss, val_loss, adam.lr()
            )
            stop = stopping.observe(val_loss)
            if stopping.improved():
                best = params.snapshot()
            if stop:
                _log.info("Early stopping after epoch %d", epoch)
                break
            adam.set_lr(schedule.observe(val_loss))
        params.restore(best)
        params.zero_grad()
        model.mark_fitted()
        _log.info("Best epoch %d, validation %.6f", stopping.best_epoch(), stopping.best())
        return FitResult(model, history, stopping.best_epoch(), held)

    def _epoch(self, model, samples, adam, rng):
        params = model.parameters()
        order = rng.permutation(samples.count())
        size = self._config.batch()
        total = 0.0
        for start in range(0, len(order), size):
            positions = order[start:start + size]
            history, window, target = samples.batch(positions)
            params.zero_grad()
            with GradientTape() as tape:
                terms, _ = model.loss(history, window, target, rng, training=True)
            tape.backward(terms.total())
            clip_global_norm(params.tensors(), self._config.grad_clip())
            adam.step()
            total += terms.total().item() * len(positions)
        return total / len(order)

    def validate(self, model, samples, seed):
        """
        Average losses of a model on held-out samples without sampling noise.

        Args:
            model: DartsModel
            samples: SampleSet
            seed: Integer seed of the evaluation generator

        Returns:
            Tuple (total loss, NLL) averaged per sample
        """
        rng = np.random.default_rng(seed)
        size = self._config.batch()
        total = 0.0
        nll = 0.0
        for start in range(0, samples.count(), size):
            positions = np.arange(start, min(start + size, samples.count()))
            history, window, target = samples.batch(positions)
            terms, _ = model.loss(history, window, target, rng, training=False)
            total += terms.total().item() * len(positions)
            nll += terms.nll().item() * len(positions)
        return total / samples.count(), nll / samples.count()

    def __repr__(self):
        return "Trainer(%r)" % self._config
