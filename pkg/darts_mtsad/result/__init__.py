# -*- coding: utf-8 -*-
"""
Result types for null-free design.

Provides Either and Optional ADTs for boundaries and the exception
family raised by numerical code.
"""
from darts_mtsad.result.either import Either, Right, Left, Problem
from darts_mtsad.result.optional import Optional, Some, Empty
from darts_mtsad.result.errors import (
    DartsError, DimensionError, DomainError, DegenerateRowError,
    ParameterError, ContractError, ConfigurationError, FormatError,
    InsufficientDataError, DegenerateContextError, CompatibilityError,
    NumericError, UsageError
)

__all__ = [
    'Either', 'Right', 'Left', 'Problem', 'Optional', 'Some', 'Empty',
    'DartsError', 'DimensionError', 'DomainError', 'DegenerateRowError',
    'ParameterError', 'ContractError', 'ConfigurationError', 'FormatError',
    'InsufficientDataError', 'DegenerateContextError', 'CompatibilityError',
    'NumericError', 'UsageError'
]
