# -*- coding: utf-8 -*-
"""
Worker pool for concurrent per-seed runs.

Contains TaskQueue, Task implementations, workers and SeedRunner.
"""
from darts_mtsad.sync.queue import TaskQueue
from darts_mtsad.sync.task import Task, SeedTask, FakeTask
from darts_mtsad.sync.worker import Worker, ThreadWorker
from darts_mtsad.sync.runner import SeedRunner

__all__ = [
    'TaskQueue', 'Task', 'SeedTask', 'FakeTask', 'Worker', 'ThreadWorker',
    'SeedRunner'
]
