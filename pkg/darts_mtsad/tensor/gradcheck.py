# -*- coding: utf-8 -*-
"""
Central finite-difference check of taped gradients.

Example:
    >>> x = Tensor(np.array([1.0, 2.0]), requires_grad=True)
    >>> errors = check_gradients(lambda: (x * x * x).sum(), {"x": x})
    >>> errors["x"] < 1e-6
    True
"""
import numpy as np

from darts_mtsad.tensor.tape import GradientTape


def relative_error(analytic, numeric):
    """
    Relative distance of two gradient arrays.

    Args:
        analytic: Array from backward
        numeric: Array from finite differences

    Returns:
        ||a - n|| / max(||a|| + ||n||, 1e-12)
    """
    scale = max(np.linalg.norm(analytic) + np.linalg.norm(numeric), 1e-12)
    return float(np.linalg.norm(analytic - numeric) / scale)


def check_gradients(loss, params, step=1e-5, entries=None, rng=None):
    """
    Compare backward gradients with central differences.

    The loss closure must be deterministic: it is called once under a
    tape and twice per checked entry without one.

    Args:
        loss: Function returning a scalar Tensor
        params: Dict name -> float64 leaf Tensor
        step: Finite-difference step
        entries: Optional cap on checked entries per parameter
        rng: numpy Generator choosing entries when capped

    Returns:
        Dict name -> relative error over the checked entries
    """
    rng = rng if rng is not None else np.random.default_rng(0)
    for tensor in params.values():
        tensor.zero_grad()
    with GradientTape() as tape:
        value = loss()
    grads = tape.backward(value)
    errors = {}
    for name, tensor in params.items():
        flat = tensor.values().reshape(-1)
        chosen = np.arange(flat.size)
        if entries is not None and flat.size > entries:
            chosen = np.sort(rng.choice(flat.size, size=entries, replace=False))
        analytic = grads.of(tensor).reshape(-1)[chosen]
        numeric = np.zeros(len(chosen))
        for slot, position in enumerate(chosen):
            original = flat[position]
            flat[position] = original + step
            up = loss().item()
            flat[position] = original - step
            down = loss().item()
            flat[position] = original
            numeric[slot] = (up - down) / (2.0 * step)
        errors[name] = relative_error(analytic, numeric)
    return errors
