# -*- coding: utf-8 -*-
"""
GradientTape records executed operations and replays them in reverse.

Example:
    >>> x = Tensor([1.0, 2.0, 3.0], requires_grad=True)
    >>> with GradientTape() as tape:
    ...     loss = (x * x).sum()
    >>> tape.backward(loss).of(x)
    array([2., 4., 6.])
"""
import threading

import numpy as np

from darts_mtsad.result.errors import ContractError
from darts_mtsad.result.optional import Empty, Some


_local = threading.local()


def active_tape():
    """
    Get the innermost tape of the calling thread.

    Returns:
        Optional[GradientTape]
    """
    stack = getattr(_local, "stack", None)
    if not stack:
        return Empty()
    return Some(stack[-1])


def unbroadcast(grad, shape):
    """
    Sum a gradient over the axes that broadcasting expanded.

    Args:
        grad: Gradient array of the broadcast result
        shape: Shape of the operand before broadcasting

    Returns:
        Array of the operand shape
    """
    if grad.shape == tuple(shape):
        return grad
    while grad.ndim > len(shape):
        grad = grad.sum(axis=0)
    for axis, extent in enumerate(shape):
        if extent == 1 and grad.shape[axis] != 1:
            grad = grad.sum(axis=axis, keepdims=True)
    return grad


class _Record:
    """One executed operation."""

    __slots__ = ("name", "output", "inputs", "backward")

    def __init__(self, name, output, inputs, backward):
        self.name = name
        self.output = output
        self.inputs = inputs
        self.backward = backward


class GradientTape:
    """
    Ordered record of operations on tensors that require gradients.

    A tape is active for the current thread inside its ``with`` block.
    It is cleared after every backward pass.

    Example:
        >>> w = Tensor([[0.5]], requires_grad=True)
        >>> with GradientTape() as tape:
        ...     y = (Tensor([[2.0]]) @ w).sum()
        >>> tape.backward(y).of(w)
        array([[2.]])
    """

    def __init__(self):
        self._records = []

    def __enter__(self):
        stack = getattr(_local, "stack", None)
        if stack is None:
            stack = []
            _local.stack = stack
        stack.append(self)
        return self

    def __exit__(self, kind, value, trace):
        _local.stack.pop()
        return False

    def record(self, name, output, inputs, backward):
        """
        Append an executed operation.

        Args:
            name: Operation name for diagnostics
            output: Tensor produced
            inputs: Sequence of input tensors
            backward: Function mapping output gradient to input gradients
        """
        self._records.append(_Record(name, output, tuple(inputs), backward))

    def size(self):
        return len(self._records)

    def backward(self, loss):
        """
        Replay the tape in reverse from a scalar loss.

        Every reachable leaf that requires gradients accumulates its
        gradient; the tape is empty afterwards.

        Args:
            loss: Scalar Tensor produced by taped operations

        Returns:
            GradientMap of leaf gradients

        Raises:
            ContractError: If loss is not a scalar
        """
        if loss.size() != 1:
            raise ContractError(
                "Loss must be a scalar",
                {"shape": loss.shape()}
            )
        grads = {id(loss): np.ones_like(loss.values())}
        leaves = {}
        try:
            for record in reversed(self._records):
                grad = grads.pop(id(record.output), None)
                if grad is None:
                    continue
                parts = record.backward(grad)
                for tensor, part in zip(record.inputs, parts):
                    if part is None or not tensor.requires_grad():
                        continue
                    part = unbroadcast(np.asarray(part), tensor.shape())
                    key = id(tensor)
                    if key in grads:
                        grads[key] = grads[key] + part
                    else:
                        grads[key] = part
                    if tensor.is_leaf():
                        leaves[key] = tensor
        finally:
            self._records = []
        result = GradientMap()
        for key, tensor in leaves.items():
            tensor.accumulate(grads[key])
            result.put(tensor, grads[key])
        return result

    def __repr__(self):
        return "GradientTape(records=%d)" % len(self._records)


class GradientMap:
    """
    Gradients of the leaves reached by one backward pass.

    Leaves that the loss does not depend on answer zeros.

    Example:
        >>> grads = GradientMap()
        >>> grads.of(Tensor([1.0, 1.0], requires_grad=True))
        array([0., 0.])
    """

    def __init__(self):
        self._grads = {}

    def put(self, tensor, grad):
        self._grads[id(tensor)] = (tensor, grad)

    def of(self, tensor):
        """
        Get the gradient of a leaf.

        Args:
            tensor: Leaf tensor

        Returns:
            Gradient array, zeros if the leaf was not reached
        """
        entry = self._grads.get(id(tensor))
        if entry is None:
            return np.zeros(tensor.shape(), dtype=tensor.dtype())
        return entry[1]

    def reached(self, tensor):
        return id(tensor) in self._grads

    def __len__(self):
        return len(self._grads)
