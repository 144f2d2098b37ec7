# -*- coding: utf-8 -*-
"""
SeedRunner: run one job per seed on a pool of workers.

Example:
    >>> runner = SeedRunner(TaskQueue(), [ThreadWorker(queue) for _ in range(2)])
    >>> runner.run([0, 1, 2], train_seed)
    [(0, Right(...)), (1, Right(...)), (2, Right(...))]
"""
import logging
import threading

from darts_mtsad.sync.queue import TaskQueue
from darts_mtsad.sync.task import SeedTask
from darts_mtsad.sync.worker import ThreadWorker


_log = logging.getLogger(__name__)


class SeedRunner:
    """
    Hands seed tasks to workers and collects their outcomes.

    Starts the workers, enqueues one task per seed, sends one sentinel
    per worker, joins them and returns outcomes ordered by seed.

    Example:
        >>> SeedRunner.threads(3)
        SeedRunner(workers=3)
    """

    def __init__(self, queue, workers):
        """
        Create a SeedRunner.

        Args:
            queue: TaskQueue shared with the workers
            workers: Worker instances pulling from the queue
        """
        self._queue = queue
        self._workers = list(workers)
        self._lock = threading.Lock()
        self._outcomes = {}

    @staticmethod
    def threads(count):
        """
        Build a runner with `count` thread workers.

        Args:
            count: Worker count >= 1

        Returns:
            SeedRunner
        """
        queue = TaskQueue()
        workers = [ThreadWorker(queue, "seed-worker-%d" % k) for k in range(max(1, count))]
        return SeedRunner(queue, workers)

    def run(self, seeds, job):
        """
        Run job(seed) for every seed.

        Args:
            seeds: Integer seeds
            job: Function seed -> result

        Returns:
            List of (seed, Either) ordered as the seeds
        """
        self._outcomes = {}
        _log.info("Running %d seeds on %d workers", len(seeds), len(self._workers))
        for worker in self._workers:
            worker.start()
        for seed in seeds:
            self._queue.put(SeedTask(seed, job, self._collect))
        for _ in self._workers:
            self._queue.put(None)
        for worker in self._workers:
            worker.join()
        return [(seed, self._outcomes[seed]) for seed in seeds]

    def _collect(self, seed, outcome):
        with self._lock:
            self._outcomes[seed] = outcome

    def __repr__(self):
        return "SeedRunner(workers=%d)" % len(self._workers)
