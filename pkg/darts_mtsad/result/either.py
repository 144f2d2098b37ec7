# -*- coding: utf-8 -*-
"""
Either ADT for results of operations that touch files or user input.

Example:
    >>> result = Right(42)
    >>> result.fold(lambda p: -1, lambda v: v + 1)
    43

    >>> failure = Left(Problem("Missing label column", {"path": "test.csv"}, "data"))
    >>> failure.fold(lambda p: p.text(), lambda v: "ok")
    'Missing label column (path=test.csv)'
"""
from abc import ABCMeta, abstractmethod


EXIT_CODES = {
    "usage": 1,
    "config": 1,
    "contract": 1,
    "data": 2,
    "compatibility": 2,
    "numeric": 3,
}


class Either(metaclass=ABCMeta):
    """
    Abstract base class for Either ADT.

    Right carries a successful value, Left carries a Problem.

    Example:
        >>> def ratio(text):
        ...     value = float(text)
        ...     if 0 < value < 0.5:
        ...         return Right(value)
        ...     return Left(Problem("ratio outside (0, 0.5)", {"ratio": text}, "config"))
        >>> ratio("0.06").fold(lambda p: 0.0, lambda v: v)
        0.06
    """

    @abstractmethod
    def fold(self, left, right):
        """
        Apply left function if Left, right function if Right.

        Args:
            left: Function receiving the Problem
            right: Function receiving the value

        Returns:
            Result of the applied function
        """
        raise NotImplementedError()

    @abstractmethod
    def is_right(self):
        """
        Check if this is a Right value.

        Returns:
            True if Right, False if Left
        """
        raise NotImplementedError()

    @abstractmethod
    def map(self, func):
        """
        Transform the Right value, pass Left through.

        Args:
            func: Function applied to the value

        Returns:
            New Either
        """
        raise NotImplementedError()

    @abstractmethod
    def flatmap(self, func):
        """
        Chain an operation that itself returns Either.

        Args:
            func: Function returning Either

        Returns:
            Result of func if Right, this Left otherwise
        """
        raise NotImplementedError()

    @abstractmethod
    def unwrap(self):
        """
        Get the value or raise the Problem as an exception.

        Returns:
            The Right value

        Raises:
            DartsError: Built from the Problem of a Left
        """
        raise NotImplementedError()


class Right(Either):
    """
    Success case of Either ADT.

    Example:
        >>> Right([1.0, 2.0]).map(len).unwrap()
        2
    """

    def __init__(self, content):
        """
        Create a Right with the given content.

        Args:
            content: The successful value
        """
        self._content = content

    def fold(self, left, right):
        return right(self._content)

    def is_right(self):
        return True

    def map(self, func):
        return Right(func(self._content))

    def flatmap(self, func):
        return func(self._content)

    def unwrap(self):
        return self._content

    def __eq__(self, other):
        if not isinstance(other, Right):
            return False
        return self._content == other._content

    def __repr__(self):
        return "Right(%r)" % (self._content,)


class Left(Either):
    """
    Failure case of Either ADT.

    Example:
        >>> Left(Problem("bad header", {}, "data")).map(len).is_right()
        False
    """

    def __init__(self, problem):
        """
        Create a Left with the given problem.

        Args:
            problem: Problem describing the failure
        """
        self._problem = problem

    def fold(self, left, right):
        return left(self._problem)

    def is_right(self):
        return False

    def map(self, func):
        return self

    def flatmap(self, func):
        return self

    def unwrap(self):
        from darts_mtsad.result.errors import DartsError
        raise DartsError.of(self._problem)

    def error(self):
        """
        Get the wrapped problem.

        Returns:
            The Problem describing the failure
        """
        return self._problem

    def __eq__(self, other):
        if not isinstance(other, Left):
            return False
        return self._problem == other._problem

    def __repr__(self):
        return "Left(%r)" % (self._problem,)


class Problem:
    """
    Failure description with context and a kind that selects the exit code.

    Example:
        >>> p = Problem("Series too short", {"length": 120, "minimum": 360}, "data")
        >>> p.text()
        'Series too short (length=120, minimum=360)'
        >>> p.code()
        2
    """

    def __init__(self, message, context, kind="data"):
        """
        Create a Problem.

        Args:
            message: Human readable message
            context: Dict of context key-value pairs
            kind: One of usage, config, contract, data, compatibility, numeric

        Raises:
            ValueError: If kind is unknown
        """
        if kind not in EXIT_CODES:
            raise ValueError("Unknown problem kind: %s" % kind)
        self._message = message
        self._context = dict(context)
        self._kind = kind

    def text(self):
        """
        Format the problem as a string.

        Returns:
            Message with sorted context in parentheses
        """
        if not self._context:
            return self._message
        pairs = ", ".join(
            "%s=%s" % (k, v) for k, v in sorted(self._context.items())
        )
        return "%s (%s)" % (self._message, pairs)

    def message(self):
        return self._message

    def context(self):
        return dict(self._context)

    def kind(self):
        return self._kind

    def code(self):
        """
        Get the process exit code for this problem.

        Returns:
            Integer exit code (1 usage/config, 2 data, 3 numeric)
        """
        return EXIT_CODES[self._kind]

    def __eq__(self, other):
        if not isinstance(other, Problem):
            return False
        return (
            self._message == other._message and
            self._context == other._context and
            self._kind == other._kind
        )

    def __repr__(self):
        return "Problem(%r, %r, %r)" % (self._message, self._context, self._kind)
