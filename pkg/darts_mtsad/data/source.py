# -*- coding: utf-8 -*-
"""
CSV source and sink for multichannel series.

A file has one header row. An optional leading ``timestamp`` column is
dropped; with labels, the final column is ``label`` holding 0 or 1.

Example:
    >>> CsvSource("train.csv", False).load().fold(lambda p: None, lambda d: d.width())
    51
    >>> CsvSource("missing.csv", True).load().is_right()
    False
"""
import logging
import os

import numpy as np
import pandas as pd

from darts_mtsad.domain.dataset import TimeSeriesDataset
from darts_mtsad.result.either import Right, Left, Problem
from darts_mtsad.result.errors import FormatError


_log = logging.getLogger(__name__)


class CsvSource:
    """
    Reads a TimeSeriesDataset from a CSV file.

    Rows keep their file order and channels keep header order. Missing
    values are rejected, never imputed.

    Example:
        >>> source = CsvSource("test.csv", True)
        >>> source.load().map(lambda d: d.anomaly_ratio()).unwrap()
        0.0571
    """

    def __init__(self, path, labeled):
        """
        Create a CsvSource.

        Args:
            path: CSV file path
            labeled: Whether the final column holds labels
        """
        self._path = path
        self._labeled = bool(labeled)

    def load(self):
        """
        Read and validate the file.

        Returns:
            Either[Problem, TimeSeriesDataset]
        """
        if not os.path.exists(self._path):
            return Left(Problem("Data file not found", {"path": self._path}, "data"))
        try:
            frame = pd.read_csv(
                self._path, dtype=str, keep_default_na=False,
                skipinitialspace=True
            )
        except pd.errors.EmptyDataError:
            return Left(Problem("Data file has no header", {"path": self._path}, "data"))
        except pd.errors.ParserError as e:
            return Left(Problem(
                "Ragged row in data file",
                {"path": self._path, "error": str(e).strip()},
                "data"
            ))
        except (IOError, UnicodeDecodeError) as e:
            return Left(Problem(
                "Cannot read data file",
                {"path": self._path, "error": str(e)},
                "data"
            ))
        try:
            dataset = self._parse(frame)
        except FormatError as e:
            return Left(e.problem())
        _log.info(
            "Loaded %s: %d steps, %d channels",
            self._path, dataset.length(), dataset.width()
        )
        return Right(dataset)

    def _parse(self, frame):
        """
        Convert the string frame into a dataset.

        Args:
            frame: pandas DataFrame of strings

        Returns:
            TimeSeriesDataset

        Raises:
            FormatError: With the file row and column of the offending cell
        """
        columns = [str(c).strip() for c in frame.columns]
        frame.columns = columns
        if columns and columns[0].lower() == "timestamp":
            frame = frame.iloc[:, 1:]
            columns = columns[1:]
        labels = None
        if self._labeled:
            if not columns or columns[-1].lower() != "label":
                raise FormatError(
                    "Missing label column",
                    {"path": self._path, "last": columns[-1] if columns else None}
                )
            labels = frame.iloc[:, -1]
            frame = frame.iloc[:, :-1]
            columns = columns[:-1]
        if frame.shape[0] == 0 or not columns:
            raise FormatError("Data file has no data rows", {"path": self._path})
        ragged = frame.isna().any(axis=1)
        if ragged.any():
            raise FormatError(
                "Ragged row in data file",
                {"path": self._path, "row": _line(int(np.argmax(ragged.values)))}
            )
        values = frame.apply(pd.to_numeric, errors="coerce").values.astype(np.float64)
        bad = ~np.isfinite(values)
        if bad.any():
            row, col = np.argwhere(bad)[0]
            cell = frame.iat[row, col]
            raise FormatError(
                "Missing value in data file" if cell == "" else "Non-numeric cell in data file",
                {"path": self._path, "row": _line(row), "column": columns[col]}
            )
        if labels is not None:
            labels = self._labels(labels)
        return TimeSeriesDataset(values, columns, labels)

    def _labels(self, column):
        flags = pd.to_numeric(column, errors="coerce")
        valid = flags.isin([0, 1]).values
        if not valid.all():
            row = int(np.argmin(valid))
            raise FormatError(
                "Label must be 0 or 1",
                {"path": self._path, "row": _line(row), "column": "label"}
            )
        return flags.values.astype(bool)

    def __repr__(self):
        return "CsvSource(%r, labeled=%s)" % (self._path, self._labeled)


class CsvSink:
    """
    Writes a TimeSeriesDataset in the format CsvSource reads.

    Example:
        >>> CsvSink("noisy.csv").save(dataset)
    """

    def __init__(self, path):
        self._path = path

    def save(self, dataset):
        """
        Write values and, when present, labels.

        Args:
            dataset: TimeSeriesDataset
        """
        frame = pd.DataFrame(dataset.values(), columns=dataset.names())
        dataset.labels().fold(
            lambda: None,
            lambda v: frame.insert(frame.shape[1], "label", v.astype(int))
        )
        folder = os.path.dirname(self._path)
        if folder and not os.path.isdir(folder):
            os.makedirs(folder)
        frame.to_csv(self._path, index=False, float_format="%.17g")
        _log.info("Wrote %s: %d steps", self._path, dataset.length())

    def __repr__(self):
        return "CsvSink(%r)" % self._path


def _line(row):
    """File line number of a data row; the header is line 1."""
    return int(row) + 2
