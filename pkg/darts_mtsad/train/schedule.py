# -*- coding: utf-8 -*-
"""
Learning-rate plateau decay and early stopping.

Example:
    >>> schedule = PlateauSchedule(1e-3, factor=0.8, patience=5)
    >>> for loss in [1.0] * 11:
    ...     lr = schedule.observe(loss)
    >>> round(lr, 10)
    0.00064
"""
import logging

from darts_mtsad.result.errors import ParameterError


_log = logging.getLogger(__name__)


class PlateauSchedule:
    """
    Multiply the learning rate by a factor after `patience` epochs
    without improvement, never going below min_lr.

    Example:
        >>> PlateauSchedule(1e-3).lr()
        0.001
    """

    def __init__(self, lr, factor=0.8, patience=5, min_lr=1e-6):
        """
        Create a PlateauSchedule.

        Args:
            lr: Initial learning rate
            factor: Decay factor in (0, 1)
            patience: Epochs without improvement before a decay, >= 1
            min_lr: Lower bound of the learning rate

        Raises:
            ParameterError: If an argument is out of range
        """
        if not 0 < factor < 1 or patience < 1 or lr <= 0 or min_lr < 0:
            raise ParameterError(
                "Invalid plateau schedule",
                {"lr": lr, "factor": factor, "patience": patience, "min_lr": min_lr}
            )
        self._lr = float(lr)
        self._factor = float(factor)
        self._patience = int(patience)
        self._min = float(min_lr)
        self._best = float("inf")
        self._waiting = 0

    def lr(self):
        return self._lr

    def observe(self, loss):
        """
        Record one validation loss.

        Args:
            loss: Validation loss of the finished epoch

        Returns:
            Learning rate for the next epoch
        """
        if loss < self._best:
            self._best = loss
            self._waiting = 0
            return self._lr
        self._waiting += 1
        if self._waiting >= self._patience:
            self._waiting = 0
            decayed = max(self._lr * self._factor, self._min)
            if decayed < self._lr:
                _log.info("Validation plateau, learning rate %g -> %g", self._lr, decayed)
            self._lr = decayed
        return self._lr


class EarlyStopping:
    """
    Stop once the validation loss has not improved for `patience` epochs.

    Example:
        >>> stop = EarlyStopping(2)
        >>> [stop.observe(x) for x in (3.0, 2.0, 2.5, 2.4)]
        [False, False, False, True]
        >>> stop.best_epoch()
        1
    """

    def __init__(self, patience=20):
        if patience < 1:
            raise ParameterError("Patience must be at least 1", {"patience": patience})
        self._patience = int(patience)
        self._best = float("inf")
        self._best_epoch = -1
        self._epoch = -1

    def observe(self, loss):
        """
        Record one validation loss.

        Args:
            loss: Validation loss of the finished epoch

        Returns:
            True when training should stop
        """
        self._epoch += 1
        if loss < self._best:
            self._best = loss
            self._best_epoch = self._epoch
            return False
        return self._epoch - self._best_epoch >= self._patience

    def improved(self):
        """
        Tell whether the last observed loss is the best so far.

        Returns:
            Boolean
        """
        return self._best_epoch == self._epoch

    def best(self):
        return self._best

    def best_epoch(self):
        return self._best_epoch
