# -*- coding: utf-8 -*-
"""
LossTerms domain object: structure and likelihood parts of the objective.

Example:
    >>> terms = LossTerms(Tensor(0.25), Tensor(1.0), 1.0)
    >>> terms.total().item()
    1.25
"""


class LossTerms:
    """
    KL regularizer, Gaussian NLL and their sum.

    The total is computed once as kl + nll so it equals the sum of
    the parts exactly.

    Example:
        >>> LossTerms(Tensor(1.0), Tensor(2.0), 0.5).sigma_sq()
        0.5
    """

    def __init__(self, kl, nll, sigma_sq):
        """
        Create LossTerms.

        Args:
            kl: Scalar Tensor
            nll: Scalar Tensor
            sigma_sq: Positive float noise variance
        """
        self._kl = kl
        self._nll = nll
        self._total = kl + nll
        self._sigma_sq = float(sigma_sq)

    def kl(self):
        return self._kl

    def nll(self):
        return self._nll

    def total(self):
        return self._total

    def sigma_sq(self):
        return self._sigma_sq

    def __repr__(self):
        return "LossTerms(kl=%.6g, nll=%.6g, total=%.6g)" % (
            self._kl.item(), self._nll.item(), self._total.item()
        )
