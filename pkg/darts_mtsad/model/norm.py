# -*- coding: utf-8 -*-
"""
Feature normalization shared by the long-term path and fusion.

Example:
    >>> x = Tensor(np.array([[1.0, 3.0]]))
    >>> feature_norm(x, Tensor(np.ones(2)), Tensor(np.zeros(2))).values()
    array([[-0.9999995,  0.9999995]])
"""
from darts_mtsad.tensor import ops


EPSILON = 1e-6


def feature_norm(x, alpha, beta, eps=EPSILON, literal=False):
    """
    Normalize over the last axis with learned scale and shift.

    The standard form is (x - mean) / sqrt(var + eps) * alpha + beta.
    The literal form is (x - mean) / var + eps * alpha + beta.

    Args:
        x: Tensor [..., d]
        alpha: Tensor [d]
        beta: Tensor [d]
        eps: Stability constant
        literal: Use the literal form

    Returns:
        Tensor [..., d]
    """
    centered = x - x.mean(axis=-1, keepdims=True)
    var = (centered * centered).mean(axis=-1, keepdims=True)
    if literal:
        return centered / var + alpha * eps + beta
    return centered * ops.power(var + eps, -0.5) * alpha + beta


def standardize_axis(x, axis, eps=EPSILON):
    """
    Zero-mean, unit-variance scaling along one axis without parameters.

    Args:
        x: Tensor
        axis: Axis to normalize along
        eps: Stability constant

    Returns:
        Tensor of the same shape
    """
    centered = x - x.mean(axis=axis, keepdims=True)
    var = (centered * centered).mean(axis=axis, keepdims=True)
    return centered * ops.power(var + eps, -0.5)
