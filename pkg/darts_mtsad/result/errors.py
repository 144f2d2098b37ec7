# -*- coding: utf-8 -*-
"""
Exceptions raised by numerical code.

Every exception wraps a Problem so the command line can report it the
same way it reports a Left.

Example:
    >>> try:
    ...     raise DimensionError("inner extents differ", {"left": (2, 3), "right": (4, 5)})
    ... except DartsError as e:
    ...     e.problem().code()
    1
"""
from darts_mtsad.result.either import Problem


class DartsError(Exception):
    """
    Base class of all detector exceptions.

    Example:
        >>> DartsError("boom", {}).problem().kind()
        'contract'
    """

    kind = "contract"

    def __init__(self, message, context=None):
        """
        Create an error.

        Args:
            message: Human readable message
            context: Optional dict of context values
        """
        self._problem = Problem(message, context or {}, self.kind)
        super().__init__(self._problem.text())

    def problem(self):
        """
        Get the Problem behind this exception.

        Returns:
            Problem with message, context and kind
        """
        return self._problem

    @staticmethod
    def of(problem):
        """
        Build the exception class matching a problem kind.

        Args:
            problem: Problem to raise

        Returns:
            DartsError subclass instance
        """
        cls = _BY_KIND.get(problem.kind(), DartsError)
        return cls(problem.message(), problem.context())


class DimensionError(DartsError, ValueError):
    """Shapes do not agree."""


class DomainError(DartsError, ValueError):
    """Input outside the mathematical domain of an operation."""


class DegenerateRowError(DartsError, ValueError):
    """A softmax row has every entry masked."""


class ParameterError(DartsError, ValueError):
    """A hyperparameter is out of range."""


class ContractError(DartsError, ValueError):
    """A caller broke a precondition."""


class ConfigurationError(DartsError, ValueError):
    """Configuration is invalid or names an unknown key."""

    kind = "config"


class FormatError(DartsError, ValueError):
    """Input file is malformed."""

    kind = "data"


class InsufficientDataError(DartsError, ValueError):
    """A series is too short for the requested windowing."""

    kind = "data"


class DegenerateContextError(DartsError, ValueError):
    """History holds fewer than two pooled windows."""


class UsageError(DartsError, ValueError):
    """Command line arguments are malformed."""

    kind = "usage"


class CompatibilityError(DartsError, ValueError):
    """A checkpoint does not match the configuration or data."""

    kind = "compatibility"


class NumericError(DartsError, ArithmeticError):
    """A value became NaN or infinite."""

    kind = "numeric"


_BY_KIND = {
    "config": ConfigurationError,
    "usage": UsageError,
    "contract": ContractError,
    "data": FormatError,
    "compatibility": CompatibilityError,
    "numeric": NumericError,
}
