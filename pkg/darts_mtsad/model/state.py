# -*- coding: utf-8 -*-
"""
Named, ordered parameter store.

Example:
    >>> params = ParameterSet(np.float64)
    >>> w = params.glorot("fusion.query", (8, 8), np.random.default_rng(0))
    >>> params.names()
    ['fusion.query']
    >>> params.count()
    64
"""
import numpy as np

from darts_mtsad.result.errors import CompatibilityError, ContractError
from darts_mtsad.tensor.tensor import Tensor


class ParameterSet:
    """
    Ordered mapping name -> leaf Tensor that requires gradients.

    Creation order is the serialization order.

    Example:
        >>> params.add("norm.alpha", np.ones(4)).values()
        array([1., 1., 1., 1.])
    """

    def __init__(self, dtype):
        """
        Create an empty ParameterSet.

        Args:
            dtype: NumPy float dtype of every parameter
        """
        self._dtype = dtype
        self._tensors = {}

    def dtype(self):
        return self._dtype

    def add(self, name, values):
        """
        Register a parameter.

        Args:
            name: Unique dotted name
            values: Initial array

        Returns:
            The leaf Tensor

        Raises:
            ContractError: If the name is taken
        """
        if name in self._tensors:
            raise ContractError("Duplicate parameter name", {"name": name})
        tensor = Tensor(np.array(values, dtype=self._dtype), requires_grad=True)
        self._tensors[name] = tensor
        return tensor

    def glorot(self, name, shape, rng):
        """
        Register a Glorot-uniform parameter.

        Fans are the two trailing extents; leading extents index
        independent blocks such as heads.

        Args:
            name: Unique dotted name
            shape: Parameter shape, at least 2-D
            rng: numpy.random.Generator

        Returns:
            The leaf Tensor
        """
        limit = np.sqrt(6.0 / (shape[-2] + shape[-1]))
        return self.add(name, rng.uniform(-limit, limit, size=shape))

    def zeros(self, name, shape):
        return self.add(name, np.zeros(shape))

    def ones(self, name, shape):
        return self.add(name, np.ones(shape))

    def get(self, name):
        return self._tensors[name]

    def names(self):
        return list(self._tensors.keys())

    def tensors(self):
        return list(self._tensors.values())

    def items(self):
        return list(self._tensors.items())

    def count(self):
        return int(sum(t.size() for t in self._tensors.values()))

    def zero_grad(self):
        for tensor in self._tensors.values():
            tensor.zero_grad()

    def snapshot(self):
        """
        Copy current values.

        Returns:
            Dict name -> array copy
        """
        return {name: t.values().copy() for name, t in self._tensors.items()}

    def restore(self, snapshot):
        """
        Put back values from snapshot() or a checkpoint.

        Args:
            snapshot: Dict name -> array

        Raises:
            CompatibilityError: If names or shapes disagree
        """
        missing = [n for n in self._tensors if n not in snapshot]
        extra = [n for n in snapshot if n not in self._tensors]
        if missing or extra:
            raise CompatibilityError(
                "Parameter names differ",
                {"missing": missing[:3], "unexpected": extra[:3]}
            )
        for name, tensor in self._tensors.items():
            values = np.asarray(snapshot[name])
            if values.shape != tensor.shape():
                raise CompatibilityError(
                    "Parameter shape differs",
                    {"name": name, "stored": values.shape, "expected": tensor.shape()}
                )
            tensor.assign(values)

    def __len__(self):
        return len(self._tensors)

    def __repr__(self):
        return "ParameterSet(tensors=%d, values=%d)" % (len(self), self.count())
