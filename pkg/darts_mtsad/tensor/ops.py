# -*- coding: utf-8 -*-
"""
Differentiable operations.

Each operation computes its value with NumPy, rejects non-finite results
and, when an input requires gradients and a tape is active, records a
closure mapping the output gradient to input gradients. Broadcasting
follows NumPy rules; gradients are summed back to operand shapes by the
tape.

Example:
    >>> x = Tensor([0.0])
    >>> sigmoid(x).values()
    array([0.5])
    >>> leaky_relu(Tensor([-2.0]), 0.01).values()
    array([-0.02])
"""
import numpy as np

from darts_mtsad.result.errors import (
    DimensionError, DomainError, DegenerateRowError, NumericError,
    ParameterError
)
from darts_mtsad.tensor.tape import active_tape
from darts_mtsad.tensor.tensor import Tensor


def _result(name, value, inputs, backward):
    """
    Wrap an operation value and record it on the active tape.

    Args:
        name: Operation name
        value: NumPy result
        inputs: Input tensors
        backward: Closure from output gradient to input gradients

    Returns:
        Non-leaf Tensor

    Raises:
        NumericError: If the value holds NaN or infinity
    """
    value = np.asarray(value)
    if not np.isfinite(value).all():
        raise NumericError("Non-finite value produced", {"op": name})
    requires = any(t.requires_grad() for t in inputs)
    out = Tensor(value, requires_grad=requires).result()
    if requires:
        active_tape().fold(
            lambda: None,
            lambda tape: tape.record(name, out, inputs, backward)
        )
    return out


def lift(value, like=None):
    """
    Turn a scalar or array into a constant tensor.

    Args:
        value: Tensor, scalar or array
        like: Tensor whose dtype constants adopt

    Returns:
        Tensor
    """
    if isinstance(value, Tensor):
        return value
    dtype = like.dtype() if like is not None else None
    return Tensor(np.asarray(value, dtype=dtype))


def _pair(a, b):
    a = lift(a, b if isinstance(b, Tensor) else None)
    b = lift(b, a)
    try:
        np.broadcast_shapes(a.shape(), b.shape())
    except ValueError:
        raise DimensionError(
            "Shapes are not broadcast-compatible",
            {"left": a.shape(), "right": b.shape()}
        )
    return a, b


def add(a, b):
    a, b = _pair(a, b)
    return _result("add", a.values() + b.values(), (a, b), lambda g: (g, g))


def sub(a, b):
    a, b = _pair(a, b)
    return _result("sub", a.values() - b.values(), (a, b), lambda g: (g, -g))


def mul(a, b):
    a, b = _pair(a, b)
    x, y = a.values(), b.values()
    return _result("mul", x * y, (a, b), lambda g: (g * y, g * x))


def div(a, b):
    a, b = _pair(a, b)
    x, y = a.values(), b.values()
    return _result(
        "div", x / y, (a, b),
        lambda g: (g / y, -g * x / (y * y))
    )


def neg(a):
    return _result("neg", -a.values(), (a,), lambda g: (-g,))


def power(a, exponent):
    """
    Raise to a constant real power.

    Args:
        a: Tensor
        exponent: Python number

    Returns:
        Tensor
    """
    x = a.values()
    p = float(exponent)
    if p != int(p) and (x <= 0).any():
        raise DomainError("Fractional power of non-positive value", {"exponent": p})
    return _result(
        "power", x ** p, (a,),
        lambda g: (g * p * x ** (p - 1.0),)
    )


def exp(a):
    out = np.exp(a.values())
    return _result("exp", out, (a,), lambda g: (g * out,))


def log(a):
    x = a.values()
    if (x <= 0).any():
        raise DomainError("Logarithm of non-positive value", {"minimum": float(x.min())})
    return _result("log", np.log(x), (a,), lambda g: (g / x,))


def sigmoid(a):
    out = 0.5 * (1.0 + np.tanh(0.5 * a.values()))
    return _result("sigmoid", out, (a,), lambda g: (g * out * (1.0 - out),))


def tanh(a):
    out = np.tanh(a.values())
    return _result("tanh", out, (a,), lambda g: (g * (1.0 - out * out),))


def leaky_relu(a, slope=0.01):
    x = a.values()
    local = np.where(x > 0, 1.0, slope).astype(x.dtype)
    return _result("leaky_relu", x * local, (a,), lambda g: (g * local,))


def clip(a, low, high):
    """
    Clamp values; gradient passes only inside the range.

    Args:
        a: Tensor
        low: Lower bound
        high: Upper bound

    Returns:
        Tensor
    """
    x = a.values()
    inside = ((x >= low) & (x <= high)).astype(x.dtype)
    return _result("clip", np.clip(x, low, high), (a,), lambda g: (g * inside,))


def matmul(a, b):
    """
    Matrix product over the two trailing axes with broadcast batch axes.

    Args:
        a: Tensor [..., m, k]
        b: Tensor [..., k, n]

    Returns:
        Tensor [..., m, n]

    Raises:
        DimensionError: If inner extents or batch axes disagree
    """
    a, b = lift(a, b if isinstance(b, Tensor) else None), lift(b, a if isinstance(a, Tensor) else None)
    if a.ndim() < 2 or b.ndim() < 2 or a.shape()[-1] != b.shape()[-2]:
        raise DimensionError(
            "Matrix product shapes disagree",
            {"left": a.shape(), "right": b.shape()}
        )
    try:
        np.broadcast_shapes(a.shape()[:-2], b.shape()[:-2])
    except ValueError:
        raise DimensionError(
            "Matrix product batch axes disagree",
            {"left": a.shape(), "right": b.shape()}
        )
    x, y = a.values(), b.values()

    def backward(g):
        return (
            np.matmul(g, np.swapaxes(y, -1, -2)),
            np.matmul(np.swapaxes(x, -1, -2), g),
        )
    return _result("matmul", np.matmul(x, y), (a, b), backward)


def _axes(axis, ndim):
    if axis is None:
        return tuple(range(ndim))
    if isinstance(axis, int):
        axis = (axis,)
    return tuple(sorted(ax % ndim for ax in axis))


def sum(a, axis=None, keepdims=False):
    shape = a.shape()
    axes = _axes(axis, a.ndim())

    def backward(g):
        if not keepdims:
            g = np.expand_dims(g, axes)
        return (np.broadcast_to(g, shape),)
    return _result("sum", np.sum(a.values(), axis=axes, keepdims=keepdims), (a,), backward)


def mean(a, axis=None, keepdims=False):
    axes = _axes(axis, a.ndim())
    count = 1
    for ax in axes:
        count *= a.shape()[ax]
    return mul(sum(a, axes, keepdims), 1.0 / count)


def reshape(a, shape):
    original = a.shape()
    try:
        value = a.values().reshape(shape)
    except ValueError:
        raise DimensionError("Cannot reshape", {"from": original, "to": shape})
    return _result("reshape", value, (a,), lambda g: (g.reshape(original),))


def transpose(a, axes=None):
    if axes is None:
        axes = tuple(reversed(range(a.ndim())))
    inverse = tuple(np.argsort(axes))
    return _result(
        "transpose", np.transpose(a.values(), axes), (a,),
        lambda g: (np.transpose(g, inverse),)
    )


def index(a, key):
    """
    Basic slicing and integer indexing.

    Args:
        a: Tensor
        key: Index expression

    Returns:
        Tensor view copy
    """
    shape = a.shape()
    dtype = a.dtype()
    parts = key if isinstance(key, tuple) else (key,)
    basic = all(isinstance(p, (slice, int, type(Ellipsis), type(None))) for p in parts)

    def backward(g):
        grad = np.zeros(shape, dtype=dtype)
        if basic:
            grad[key] += g
        else:
            np.add.at(grad, key, g)
        return (grad,)
    return _result("index", a.values()[key], (a,), backward)


def concat(tensors, axis=-1):
    tensors = [lift(t) for t in tensors]
    sizes = [t.shape()[axis] for t in tensors]
    splits = np.cumsum(sizes)[:-1]
    try:
        value = np.concatenate([t.values() for t in tensors], axis=axis)
    except ValueError:
        raise DimensionError("Cannot concatenate", {"shapes": [t.shape() for t in tensors]})
    return _result(
        "concat", value, tensors,
        lambda g: tuple(np.split(g, splits, axis=axis))
    )


def stack(tensors, axis=0):
    tensors = [lift(t) for t in tensors]
    try:
        value = np.stack([t.values() for t in tensors], axis=axis)
    except ValueError:
        raise DimensionError("Cannot stack", {"shapes": [t.shape() for t in tensors]})
    return _result(
        "stack", value, tensors,
        lambda g: tuple(np.take(g, i, axis=axis) for i in range(len(tensors)))
    )


def softmax_rows(a, mask=None):
    """
    Softmax along the last axis with optional boolean mask.

    Masked entries receive probability 0; rows are stabilised by
    subtracting their maximum.

    Args:
        a: Tensor [..., c]
        mask: Optional boolean array broadcastable to a, True keeps an entry

    Returns:
        Tensor of row distributions

    Raises:
        DegenerateRowError: If a row has no unmasked entry
    """
    z = a.values()
    if mask is not None:
        keep = np.broadcast_to(np.asarray(mask, dtype=bool), z.shape)
        if not keep.any(axis=-1).all():
            raise DegenerateRowError("Softmax row is fully masked", {"shape": z.shape})
        z = np.where(keep, z, -np.inf)
    shifted = z - np.max(z, axis=-1, keepdims=True)
    e = np.exp(shifted)
    out = e / e.sum(axis=-1, keepdims=True)

    def backward(g):
        return (out * (g - np.sum(g * out, axis=-1, keepdims=True)),)
    return _result("softmax", out, (a,), backward)


def straight_through(hard, soft):
    """
    Forward a hard value, backpropagate through the soft tensor.

    Args:
        hard: Array with the shape of soft
        soft: Tensor whose gradient path is used

    Returns:
        Tensor holding hard values
    """
    value = np.asarray(hard, dtype=soft.dtype())
    if value.shape != soft.shape():
        raise DimensionError(
            "Hard and soft samples differ in shape",
            {"hard": value.shape, "soft": soft.shape()}
        )
    return _result("straight_through", value, (soft,), lambda g: (g,))


def gumbel_softmax(logits, tau, hard, rng):
    """
    Relaxed categorical sample over the trailing axis.

    Noise is -log(-log(u)) with u uniform in [1e-12, 1 - 1e-12].

    Args:
        logits: Tensor [..., categories]
        tau: Positive temperature
        hard: Return one-hot forward values with straight-through gradients
        rng: numpy.random.Generator

    Returns:
        Tensor of samples

    Raises:
        ParameterError: If tau is not positive
    """
    if not tau > 0:
        raise ParameterError("Temperature must be positive", {"tau": tau})
    u = np.clip(rng.uniform(size=logits.shape()), 1e-12, 1.0 - 1e-12)
    noise = Tensor(-np.log(-np.log(u)), dtype=logits.dtype())
    soft = softmax_rows(div(add(logits, noise), tau))
    if not hard:
        return soft
    winner = np.argmax(soft.values(), axis=-1)
    onehot = np.arange(soft.shape()[-1]) == winner[..., None]
    return straight_through(onehot, soft)
