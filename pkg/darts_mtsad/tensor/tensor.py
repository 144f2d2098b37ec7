# -*- coding: utf-8 -*-
"""
Dense tensor with reverse-mode gradients.

Values live in a row-major NumPy array. Arithmetic operators dispatch to
the differentiable operations in ``darts_mtsad.tensor.ops``.

Example:
    >>> a = Tensor([[1.0, 2.0], [3.0, 4.0]])
    >>> (a @ Tensor([[5.0], [6.0]])).values()
    array([[17.],
           [39.]])
"""
import numpy as np


class Tensor:
    """
    Dense floating-point tensor.

    Leaves are created by callers (parameters, inputs). Results of
    operations are non-leaves and carry requires_grad when any input does.

    Example:
        >>> w = Tensor(np.zeros((2, 3)), requires_grad=True)
        >>> w.shape()
        (2, 3)
        >>> w.is_leaf()
        True
    """

    __array_priority__ = 100

    def __init__(self, data, requires_grad=False, dtype=None):
        """
        Create a tensor.

        Args:
            data: Array-like values
            requires_grad: Whether gradients flow to this tensor
            dtype: Optional NumPy float dtype, float64 for non-float input
        """
        array = np.asarray(data, dtype=dtype)
        if not np.issubdtype(array.dtype, np.floating):
            array = array.astype(np.float64)
        self._data = array
        self._requires = bool(requires_grad)
        self._leaf = True
        self._grad = None

    def values(self):
        """
        Get the underlying array.

        Returns:
            NumPy array (not a copy)
        """
        return self._data

    def shape(self):
        return self._data.shape

    def ndim(self):
        return self._data.ndim

    def size(self):
        return self._data.size

    def dtype(self):
        return self._data.dtype

    def item(self):
        """
        Get the value of a single-element tensor.

        Returns:
            Python float
        """
        return float(self._data.reshape(-1)[0])

    def requires_grad(self):
        return self._requires

    def is_leaf(self):
        return self._leaf

    def grad(self):
        """
        Get the accumulated gradient.

        Returns:
            Gradient array, zeros if nothing accumulated
        """
        if self._grad is None:
            return np.zeros_like(self._data)
        return self._grad

    def accumulate(self, grad):
        """
        Add a gradient contribution.

        Args:
            grad: Array of the tensor shape
        """
        grad = np.asarray(grad, dtype=self._data.dtype)
        if self._grad is None:
            self._grad = np.array(grad, copy=True)
        else:
            self._grad = self._grad + grad

    def zero_grad(self):
        self._grad = None

    def scale_grad(self, factor):
        if self._grad is not None:
            self._grad = self._grad * factor

    def assign(self, values):
        """
        Replace the values of a leaf with a copy of an array.

        Args:
            values: Array of the same shape
        """
        self._data = np.array(values, dtype=self._data.dtype).reshape(self._data.shape)

    def detach(self):
        """
        Get a leaf copy that does not require gradients.

        Returns:
            Tensor sharing the values
        """
        return Tensor(self._data)

    def result(self):
        """
        Mark this tensor as produced by an operation.

        Returns:
            This tensor
        """
        self._leaf = False
        return self

    def sum(self, axis=None, keepdims=False):
        return ops.sum(self, axis, keepdims)

    def mean(self, axis=None, keepdims=False):
        return ops.mean(self, axis, keepdims)

    def reshape(self, *shape):
        if len(shape) == 1 and isinstance(shape[0], (tuple, list)):
            shape = tuple(shape[0])
        return ops.reshape(self, shape)

    def transpose(self, *axes):
        if len(axes) == 1 and isinstance(axes[0], (tuple, list)):
            axes = tuple(axes[0])
        return ops.transpose(self, axes or None)

    def __add__(self, other):
        return ops.add(self, other)

    def __radd__(self, other):
        return ops.add(other, self)

    def __sub__(self, other):
        return ops.sub(self, other)

    def __rsub__(self, other):
        return ops.sub(other, self)

    def __mul__(self, other):
        return ops.mul(self, other)

    def __rmul__(self, other):
        return ops.mul(other, self)

    def __truediv__(self, other):
        return ops.div(self, other)

    def __rtruediv__(self, other):
        return ops.div(other, self)

    def __neg__(self):
        return ops.neg(self)

    def __pow__(self, exponent):
        return ops.power(self, exponent)

    def __matmul__(self, other):
        return ops.matmul(self, other)

    def __getitem__(self, key):
        return ops.index(self, key)

    def __repr__(self):
        return "Tensor(shape=%s, requires_grad=%s)" % (self.shape(), self._requires)


from darts_mtsad.tensor import ops  # noqa: E402
