# -*- coding: utf-8 -*-
"""
Worker interface and the thread worker.

Example:
    >>> worker = ThreadWorker(queue)
    >>> worker.start()
    >>> queue.put(task)
    >>> queue.put(None)  # Sentinel
    >>> worker.join()
"""
import logging
import threading
from abc import ABCMeta, abstractmethod


_log = logging.getLogger(__name__)


class Worker(metaclass=ABCMeta):
    """
    Interface for task executors.

    Workers pull tasks from a queue until they receive None.
    """

    @abstractmethod
    def start(self):
        raise NotImplementedError()

    @abstractmethod
    def join(self):
        """
        Wait for the worker to finish.
        """
        raise NotImplementedError()


class ThreadWorker(Worker):
    """
    Executes tasks on its own thread.

    Every executed task is recorded. A task that raises is logged and
    skipped, the loop keeps pulling.

    Example:
        >>> queue = TaskQueue()
        >>> worker = ThreadWorker(queue, "seed-worker-0")
        >>> worker.start()
        >>> queue.put(FakeTask())
        >>> queue.put(None)
        >>> worker.join()
        >>> len(worker.executed())
        1
    """

    def __init__(self, queue, name=None):
        """
        Create a ThreadWorker.

        Args:
            queue: TaskQueue to pull tasks from
            name: Optional thread name
        """
        self._queue = queue
        self._thread = threading.Thread(target=self._run, name=name)
        self._thread.daemon = True
        self._executed = []
        self._lock = threading.Lock()

    def start(self):
        self._thread.start()

    def join(self):
        self._thread.join()

    def _run(self):
        while True:
            task = self._queue.get()
            if task is None:
                break
            with self._lock:
                self._executed.append(task)
            try:
                task.execute()
            except Exception:
                _log.exception("Task %r failed", task)

    def executed(self):
        """
        Get the executed tasks.

        Returns:
            List of Task objects in execution order
        """
        with self._lock:
            return list(self._executed)

    def __repr__(self):
        return "ThreadWorker(%s)" % self._thread.name
