# -*- coding: utf-8 -*-
"""
TaskQueue for handing seed runs to workers.

Example:
    >>> queue = TaskQueue()
    >>> queue.put(task)
    >>> queue.get() is task
    True
"""
import queue as queue_module


class TaskQueue:
    """
    Thread-safe FIFO of tasks; None is the shutdown sentinel.

    Example:
        >>> q = TaskQueue()
        >>> q.put(first)
        >>> q.put(None)
        >>> q.size()
        2
    """

    def __init__(self):
        self._queue = queue_module.Queue()

    def put(self, task):
        """
        Add a task or the None sentinel.

        Args:
            task: Task, or None to stop one worker
        """
        self._queue.put(task)

    def get(self):
        """
        Remove and return the next entry, blocking while empty.

        Returns:
            Next Task or None
        """
        return self._queue.get()

    def size(self):
        return self._queue.qsize()

    def __repr__(self):
        return "TaskQueue(size=%d)" % self.size()
