# -*- coding: utf-8 -*-
"""
Logging configuration for the detector.

Example:
    >>> logger = LogConfig("DEBUG").setup()
    >>> logger.info("Training seed 0")
"""
import logging
import sys

from darts_mtsad.result.errors import ConfigurationError


class LogConfig:
    """
    Configures the ``darts_mtsad`` logger.

    Output goes to stdout. Calling setup() again only updates the level,
    so handlers never stack up.

    Example:
        >>> LogConfig().setup().level == logging.INFO
        True
    """

    NAME = "darts_mtsad"

    def __init__(self, level="INFO"):
        """
        Create a LogConfig.

        Args:
            level: Level name such as INFO or DEBUG

        Raises:
            ConfigurationError: If the level name is unknown
        """
        value = logging.getLevelName(str(level).upper())
        if not isinstance(value, int):
            raise ConfigurationError("Unknown log level", {"log-level": level})
        self._format = "%(asctime)s %(levelname)s %(message)s"
        self._level = value

    def setup(self):
        """
        Configure and return the package logger.

        Returns:
            Configured Logger instance
        """
        logger = logging.getLogger(self.NAME)
        logger.setLevel(self._level)
        if not any(getattr(h, "_darts", False) for h in logger.handlers):
            handler = logging.StreamHandler(sys.stdout)
            handler.setFormatter(logging.Formatter(self._format))
            handler._darts = True
            logger.addHandler(handler)
        return logger
