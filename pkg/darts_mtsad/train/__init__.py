# -*- coding: utf-8 -*-
"""
Losses, optimizer, learning-rate schedule and the training loop.
"""
from darts_mtsad.train.losses import kl_loss, gaussian_nll
from darts_mtsad.train.optimizer import Adam, clip_global_norm, global_norm
from darts_mtsad.train.schedule import PlateauSchedule, EarlyStopping
from darts_mtsad.train.trainer import (
    TrainConfig, EpochRecord, History, FitResult, Trainer
)

__all__ = [
    'kl_loss', 'gaussian_nll', 'Adam', 'clip_global_norm', 'global_norm',
    'PlateauSchedule', 'EarlyStopping', 'TrainConfig', 'EpochRecord',
    'History', 'FitResult', 'Trainer'
]
