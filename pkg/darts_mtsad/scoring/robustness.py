# -*- coding: utf-8 -*-
"""
Clean versus noisy training comparison.

Example:
    >>> comparison = Comparison(0.86, 0.81)
    >>> round(comparison.degradation(), 2)
    0.05
    >>> comparison.within(0.10)
    True
"""
from darts_mtsad.result.errors import ContractError


class Comparison:
    """
    F1 of a clean run, of a noise-trained run and their difference.
    """

    def __init__(self, clean_f1, noisy_f1):
        self._clean = float(clean_f1)
        self._noisy = float(noisy_f1)

    @staticmethod
    def of(clean, noisy):
        """
        Build from two metrics documents.

        Args:
            clean: Dict with an "f1" entry, as written to metrics.json
            noisy: Dict with an "f1" entry

        Returns:
            Comparison

        Raises:
            ContractError: If a document has no F1
        """
        for name, document in (("clean", clean), ("noisy", noisy)):
            if "f1" not in document:
                raise ContractError("Metrics document has no f1", {"run": name})
        return Comparison(clean["f1"], noisy["f1"])

    def clean_f1(self):
        return self._clean

    def noisy_f1(self):
        return self._noisy

    def degradation(self):
        return self._clean - self._noisy

    def within(self, tolerance):
        return self.degradation() <= tolerance

    def json(self):
        return {
            "clean_f1": self._clean,
            "noisy_f1": self._noisy,
            "degradation": self.degradation(),
        }

    def __repr__(self):
        return "Comparison(clean=%.4f, noisy=%.4f)" % (self._clean, self._noisy)
