# -*- coding: utf-8 -*-
"""
Dual-path detector: short-term graph path, long-term affinity path and
window-aware soft fusion.
"""
from darts_mtsad.model.architecture import Architecture
from darts_mtsad.model.state import ParameterSet
from darts_mtsad.model.sarm import WindowEncoder, GraphLearner, DiffusionUnit
from darts_mtsad.model.lsgm import LongTermPath, pool_windows, decay_matrix
from darts_mtsad.model.fusion import SoftFusion
from darts_mtsad.model.darts import DartsModel, Forward

__all__ = [
    'Architecture', 'ParameterSet', 'WindowEncoder', 'GraphLearner',
    'DiffusionUnit', 'LongTermPath', 'pool_windows', 'decay_matrix',
    'SoftFusion', 'DartsModel', 'Forward'
]
