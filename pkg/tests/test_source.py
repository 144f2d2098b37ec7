# -*- coding: utf-8 -*-
"""
Tests for CsvSource and CsvSink.
"""
import logging
import os
import shutil
import tempfile
import unittest

import numpy as np

from darts_mtsad.data.source import CsvSink, CsvSource
from darts_mtsad.domain.dataset import TimeSeriesDataset

logging.disable(logging.CRITICAL)


class TestCsvSource(unittest.TestCase):
    """Tests for CsvSource."""

    def setUp(self):
        self.folder = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.folder)

    def _file(self, text):
        path = os.path.join(self.folder, "data.csv")
        with open(path, "w") as f:
            f.write(text)
        return path

    def _problem(self, text, labeled=False):
        return CsvSource(self._file(text), labeled).load().fold(lambda p: p, lambda d: None)

    def test_csv_source_reads_values_in_file_order(self):
        path = self._file("a,b\n1,2\n3,4\n5,6\n")
        dataset = CsvSource(path, False).load().unwrap()
        self.assertTrue(
            np.array_equal(dataset.values(), [[1, 2], [3, 4], [5, 6]]),
            "Values should keep row and column order"
        )
        self.assertEqual(dataset.names(), ["a", "b"], "Names should come from the header")

    def test_csv_source_drops_timestamp_column(self):
        path = self._file("timestamp,a\n2020-01-01,1.5\n2020-01-02,2.5\n")
        dataset = CsvSource(path, False).load().unwrap()
        self.assertEqual(dataset.names(), ["a"], "The timestamp column should be dropped")

    def test_csv_source_reads_labels(self):
        path = self._file("a,b,label\n1,2,0\n3,4,1\n")
        dataset = CsvSource(path, True).load().unwrap()
        self.assertEqual(
            dataset.labels().otherwise(None).tolist(), [False, True],
            "The label column should become boolean labels"
        )
        self.assertEqual(dataset.width(), 2, "The label column should not be a channel")

    def test_csv_source_missing_file_is_left(self):
        result = CsvSource(os.path.join(self.folder, "none.csv"), False).load()
        self.assertEqual(
            result.fold(lambda p: p.code(), lambda d: 0), 2,
            "A missing file should be a data problem with exit code 2"
        )

    def test_csv_source_reports_missing_value_position(self):
        problem = self._problem("a,b\n1,2\n3,\n")
        self.assertEqual(
            (problem.context()["row"], problem.context()["column"]), (3, "b"),
            "A missing cell should name its file line and column"
        )

    def test_csv_source_reports_non_numeric_cell(self):
        problem = self._problem("a,b\n1,x\n")
        self.assertIn("Non-numeric", problem.message(), "A text cell should be reported")

    def test_csv_source_rejects_ragged_row(self):
        problem = self._problem("a,b\n1,2\n3,4,5\n")
        self.assertEqual(problem.kind(), "data", "A long row should be a data problem")

    def test_csv_source_rejects_short_row(self):
        problem = self._problem("a,b,c\n1,2,3\n4,5\n")
        self.assertIsNotNone(problem, "A short row should be rejected")

    def test_csv_source_rejects_missing_label_column(self):
        problem = self._problem("a,b\n1,2\n", labeled=True)
        self.assertIn("label", problem.message(), "A missing label column should be named")

    def test_csv_source_rejects_bad_label(self):
        problem = self._problem("a,label\n1,0\n2,2\n", labeled=True)
        self.assertEqual(problem.context()["row"], 3, "A bad label should name its line")

    def test_csv_source_rejects_header_only(self):
        self.assertIsNotNone(self._problem("a,b\n"), "A file without rows should be rejected")


class TestCsvSink(unittest.TestCase):
    """Tests for CsvSink."""

    def setUp(self):
        self.folder = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.folder)

    def test_csv_sink_output_reads_back_equal(self):
        path = os.path.join(self.folder, "out", "series.csv")
        dataset = TimeSeriesDataset(
            np.array([[0.1, 1.0 / 3.0], [2.5, -4.0]]), ["x", "y"], np.array([0, 1])
        )
        CsvSink(path).save(dataset)
        self.assertEqual(
            CsvSource(path, True).load().unwrap(), dataset,
            "A written dataset should read back unchanged"
        )


if __name__ == "__main__":
    unittest.main()
