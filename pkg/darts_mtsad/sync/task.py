# -*- coding: utf-8 -*-
"""
Task interface and the per-seed task.

Example:
    >>> results = []
    >>> task = SeedTask(3, lambda seed: seed * 2, results.append)
    >>> task.execute()
    >>> results
    [(3, Right(6))]
"""
import logging
from abc import ABCMeta, abstractmethod

from darts_mtsad.result.either import Left, Problem, Right
from darts_mtsad.result.errors import DartsError


_log = logging.getLogger(__name__)


class Task(metaclass=ABCMeta):
    """
    Interface for units of work run by workers.

    Example:
        >>> class Nothing(Task):
        ...     def execute(self):
        ...         pass
    """

    @abstractmethod
    def execute(self):
        """
        Run the task and report through its callback.
        """
        raise NotImplementedError()


class SeedTask(Task):
    """
    Run one job for one seed and hand back an Either.

    A DartsError raised by the job becomes a Left with its own Problem;
    any other exception becomes a contract Left, so one failing seed
    never takes the worker down.

    Example:
        >>> SeedTask(0, job, callback).seed()
        0
    """

    def __init__(self, seed, job, callback):
        """
        Create a SeedTask.

        Args:
            seed: Integer seed
            job: Function seed -> result
            callback: Function receiving (seed, Either)
        """
        self._seed = seed
        self._job = job
        self._callback = callback

    def seed(self):
        return self._seed

    def execute(self):
        try:
            outcome = Right(self._job(self._seed))
        except DartsError as e:
            _log.error("Seed %d failed: %s", self._seed, e.problem().text())
            outcome = Left(e.problem())
        except Exception as e:
            _log.exception("Seed %d failed unexpectedly", self._seed)
            outcome = Left(Problem(
                "Seed run failed", {"seed": self._seed, "error": repr(e)}, "contract"
            ))
        self._callback(self._seed, outcome)

    def __repr__(self):
        return "SeedTask(seed=%d)" % self._seed


class FakeTask(Task):
    """
    Test double that records its executions.

    Example:
        >>> task = FakeTask()
        >>> task.execute()
        >>> task.runs()
        1
    """

    def __init__(self):
        self._runs = 0

    def execute(self):
        self._runs += 1

    def runs(self):
        return self._runs
