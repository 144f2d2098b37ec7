# -*- coding: utf-8 -*-
"""
Dense tensors with reverse-mode automatic differentiation.

Contains Tensor, GradientTape, the differentiable operations and the
checkpoint container.
"""
from darts_mtsad.tensor.tensor import Tensor
from darts_mtsad.tensor.tape import GradientTape, GradientMap
from darts_mtsad.tensor.checkpoint import Checkpoint, CheckpointFile
from darts_mtsad.tensor import ops

__all__ = [
    'Tensor', 'GradientTape', 'GradientMap', 'Checkpoint', 'CheckpointFile',
    'ops'
]
