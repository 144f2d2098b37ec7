# -*- coding: utf-8 -*-
"""
Optional ADT for values that may be absent.

Labels of a training series, a fixed evaluation threshold, the long-term
affinity graph of a model without its long path: all are Optional.

Example:
    >>> Some([0, 1, 0]).fold(lambda: 0, len)
    3
    >>> Empty().otherwise(0.5)
    0.5
"""
from abc import ABCMeta, abstractmethod


class Optional(metaclass=ABCMeta):
    """
    Abstract base class for Optional ADT.

    Example:
        >>> def threshold(value):
        ...     return Empty() if value is None else Some(float(value))
        >>> threshold(None).is_present()
        False
    """

    @staticmethod
    def of(value):
        """
        Wrap a possibly-None value.

        Args:
            value: Any value or None

        Returns:
            Some(value) or Empty()
        """
        if value is None:
            return Empty()
        return Some(value)

    @abstractmethod
    def fold(self, empty, some):
        """
        Call empty() if Empty, some(value) if Some.

        Args:
            empty: Function without arguments
            some: Function receiving the value

        Returns:
            Result of the applied function
        """
        raise NotImplementedError()

    @abstractmethod
    def is_present(self):
        raise NotImplementedError()

    @abstractmethod
    def map(self, func):
        raise NotImplementedError()

    @abstractmethod
    def otherwise(self, default):
        """
        Get value or default if Empty.

        Args:
            default: Value to return if Empty

        Returns:
            Contained value or default
        """
        raise NotImplementedError()


class Some(Optional):
    """
    Present case of Optional ADT.

    Example:
        >>> Some(2).map(lambda v: v * 3).otherwise(0)
        6
    """

    def __init__(self, content):
        self._content = content

    def fold(self, empty, some):
        return some(self._content)

    def is_present(self):
        return True

    def map(self, func):
        return Some(func(self._content))

    def otherwise(self, default):
        return self._content

    def __eq__(self, other):
        if not isinstance(other, Some):
            return False
        return self._content is other._content or self._content == other._content

    def __repr__(self):
        return "Some(%r)" % (self._content,)


class Empty(Optional):
    """
    Absent case of Optional ADT.

    Example:
        >>> Empty().map(len).is_present()
        False
    """

    def fold(self, empty, some):
        return empty()

    def is_present(self):
        return False

    def map(self, func):
        return Empty()

    def otherwise(self, default):
        return default

    def __eq__(self, other):
        return isinstance(other, Empty)

    def __repr__(self):
        return "Empty()"
