# -*- coding: utf-8 -*-
"""
Structure and likelihood losses.

Example:
    >>> probs = Tensor(np.array([[[0.0, 0.5], [0.9, 0.0]]]))
    >>> round(kl_loss(probs, [0.9]).item(), 4)
    0.5108
    >>> round(gaussian_nll(Tensor([1.0]), Tensor([0.0]), Tensor(0.0)).item(), 4)
    1.4189
"""
import numpy as np

from darts_mtsad.result.errors import DimensionError, ParameterError
from darts_mtsad.tensor import ops


FLOOR = 1e-12


def kl_loss(probs, priors, form="bernoulli"):
    """
    KL divergence of off-diagonal edge probabilities from per-head priors.

    The bernoulli form sums p log(p / pi) + (1 - p) log((1 - p) / (1 - pi));
    the paper form (alias edge) keeps only p log(p / pi). Probabilities are clamped to
    [1e-12, 1 - 1e-12], or to machine epsilon in single precision. Leading
    axes before the head axis are averaged.

    Args:
        probs: Tensor [..., H, N, N] with zero diagonal
        priors: H priors in (0, 1)
        form: bernoulli, paper or its alias edge

    Returns:
        Scalar Tensor

    Raises:
        ParameterError: If a prior is outside (0, 1) or the form is unknown
    """
    priors = np.asarray(priors, dtype=np.float64).reshape(-1)
    if not ((priors > 0) & (priors < 1)).all():
        raise ParameterError("Edge priors must lie in (0, 1)", {"priors": priors.tolist()})
    if form not in ("bernoulli", "paper", "edge"):
        raise ParameterError("Unknown KL form", {"form": form})
    heads, n = probs.shape()[-3], probs.shape()[-1]
    if heads != priors.shape[0]:
        raise DimensionError(
            "Prior count differs from heads",
            {"priors": priors.shape[0], "heads": heads}
        )
    dtype = probs.dtype()
    prior = priors.reshape(heads, 1, 1).astype(dtype)
    off = (~np.eye(n, dtype=bool)).astype(dtype)
    floor = max(FLOOR, float(np.finfo(dtype).eps))
    p = ops.clip(probs, floor, 1.0 - floor)
    terms = p * (ops.log(p) - np.log(prior))
    if form == "bernoulli":
        q = 1.0 - p
        terms = terms + q * (ops.log(q) - np.log(1.0 - prior))
    per_sample = (terms * off).sum(axis=(-3, -2, -1))
    if per_sample.ndim() == 0:
        return per_sample
    return per_sample.mean()


def gaussian_nll(prediction, target, log_var, batched=False):
    """
    Gaussian negative log-likelihood with a learned variance.

    (1 / (2 sigma^2)) sum (O - Y)^2 + (count / 2) log(2 pi sigma^2), with
    sigma^2 = exp(log_var) and count the elements per sample.

    Args:
        prediction: Tensor O
        target: Tensor or array Y of the same shape
        log_var: Scalar Tensor or number log sigma^2
        batched: Average over the leading axis instead of treating the
            whole array as one sample

    Returns:
        Scalar Tensor

    Raises:
        DimensionError: If the shapes differ
    """
    target = ops.lift(target, prediction)
    if prediction.shape() != target.shape():
        raise DimensionError(
            "Prediction and target shapes differ",
            {"prediction": prediction.shape(), "target": target.shape()}
        )
    log_var = ops.lift(log_var, prediction)
    error = prediction - target
    squared = (error * error).sum()
    count = prediction.size()
    samples = 1
    if batched:
        samples = prediction.shape()[0]
        count = count // samples
    fit = squared * ops.exp(-log_var) * (0.5 / samples)
    spread = (log_var + np.log(2.0 * np.pi)) * (0.5 * count)
    return fit + spread
