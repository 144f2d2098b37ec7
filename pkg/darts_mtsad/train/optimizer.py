# -*- coding: utf-8 -*-
"""
Adaptive-moment optimizer and global-norm clipping.

Example:
    >>> adam = Adam(params.tensors(), lr=1e-3)
    >>> clip_global_norm(params.tensors(), 1.0)
    3.2
    >>> adam.step()
"""
import numpy as np

from darts_mtsad.result.errors import ParameterError


class Adam:
    """
    Adam with L2 regularization folded into the gradient.

    Moments are kept per parameter in float64. A step with lr == 0
    leaves every parameter untouched.

    Example:
        >>> adam = Adam([w], lr=0.1)
        >>> adam.step()
        >>> adam.steps()
        1
    """

    def __init__(self, params, lr=1e-3, betas=(0.9, 0.999), eps=1e-8, weight_decay=0.0):
        """
        Create an Adam optimizer.

        Args:
            params: Leaf Tensors to update
            lr: Learning rate >= 0
            betas: Moment decay rates in [0, 1)
            eps: Denominator offset
            weight_decay: L2 coefficient >= 0

        Raises:
            ParameterError: If a rate is out of range
        """
        if lr < 0 or weight_decay < 0 or eps <= 0:
            raise ParameterError(
                "Optimizer rates must be non-negative",
                {"lr": lr, "weight_decay": weight_decay, "eps": eps}
            )
        if not all(0 <= b < 1 for b in betas):
            raise ParameterError("Betas must lie in [0, 1)", {"betas": list(betas)})
        self._params = list(params)
        self._lr = float(lr)
        self._betas = (float(betas[0]), float(betas[1]))
        self._eps = float(eps)
        self._decay = float(weight_decay)
        self._first = [np.zeros(p.shape()) for p in self._params]
        self._second = [np.zeros(p.shape()) for p in self._params]
        self._steps = 0

    def lr(self):
        return self._lr

    def set_lr(self, lr):
        self._lr = float(lr)

    def steps(self):
        return self._steps

    def step(self):
        """
        Apply one update from the accumulated gradients.
        """
        self._steps += 1
        if self._lr == 0.0:
            return
        b1, b2 = self._betas
        first_fix = 1.0 - b1 ** self._steps
        second_fix = 1.0 - b2 ** self._steps
        for k, param in enumerate(self._params):
            values = param.values().astype(np.float64)
            grad = param.grad().astype(np.float64)
            if self._decay:
                grad = grad + self._decay * values
            self._first[k] = b1 * self._first[k] + (1.0 - b1) * grad
            self._second[k] = b2 * self._second[k] + (1.0 - b2) * grad * grad
            update = (self._first[k] / first_fix) / (
                np.sqrt(self._second[k] / second_fix) + self._eps
            )
            param.assign(values - self._lr * update)

    def __repr__(self):
        return "Adam(lr=%g, params=%d, steps=%d)" % (self._lr, len(self._params), self._steps)


def global_norm(params):
    """
    L2 norm of all gradients taken together.

    Args:
        params: Leaf Tensors

    Returns:
        Float norm
    """
    total = 0.0
    for param in params:
        grad = param.grad().astype(np.float64)
        total += float(np.sum(grad * grad))
    return float(np.sqrt(total))


def clip_global_norm(params, max_norm):
    """
    Rescale gradients so their global norm is at most max_norm.

    Args:
        params: Leaf Tensors
        max_norm: Positive bound

    Returns:
        Norm before clipping

    Raises:
        ParameterError: If max_norm is not positive
    """
    if not max_norm > 0:
        raise ParameterError("Clip norm must be positive", {"max_norm": max_norm})
    norm = global_norm(params)
    if norm > max_norm:
        factor = max_norm / (norm + 1e-12)
        for param in params:
            param.scale_grad(factor)
    return norm
