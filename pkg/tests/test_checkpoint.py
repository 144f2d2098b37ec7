# -*- coding: utf-8 -*-
"""
Tests for Checkpoint and CheckpointFile.
"""
import json
import logging
import os
import shutil
import tempfile
import unittest

import numpy as np

from darts_mtsad.tensor.checkpoint import Checkpoint, CheckpointFile

logging.disable(logging.CRITICAL)


class TestCheckpoint(unittest.TestCase):
    """Tests for Checkpoint."""

    def test_checkpoint_arrays_strips_prefix(self):
        cp = Checkpoint({}, {"param/a": np.zeros(2), "stats/mean": np.ones(3)})
        self.assertEqual(
            list(cp.arrays("param/").keys()), ["a"],
            "arrays should return prefixed entries without the prefix"
        )

    def test_checkpoint_meta_falls_back_to_default(self):
        self.assertEqual(
            Checkpoint({"seed": 4}, {}).meta("missing", 7), 7,
            "meta should answer the default for absent keys"
        )


class TestCheckpointFile(unittest.TestCase):
    """Tests for CheckpointFile."""

    def setUp(self):
        self.folder = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.folder)

    def test_checkpoint_file_round_trip_keeps_values_and_order(self):
        path = os.path.join(self.folder, "seed-1", "checkpoint.npz")
        arrays = {"param/b": np.arange(6.0).reshape(2, 3), "param/a": np.array([0.1])}
        CheckpointFile(path).save({"seed": 1}, arrays)
        cp = CheckpointFile(path).load().unwrap()
        self.assertEqual(cp.names(), ["param/b", "param/a"], "Order should survive a round trip")
        self.assertTrue(
            np.array_equal(cp.array("param/b"), arrays["param/b"]),
            "Values should survive a round trip"
        )
        self.assertEqual(cp.meta("seed"), 1, "Manifest values should survive a round trip")

    def test_checkpoint_file_keeps_scalar_shape(self):
        path = os.path.join(self.folder, "scalar.npz")
        CheckpointFile(path).save({}, {"param/noise.log_var": np.zeros(()), "param/v": np.ones(1)})
        cp = CheckpointFile(path).load().unwrap()
        self.assertEqual(cp.array("param/noise.log_var").shape, (), "A 0-d array should stay 0-d")
        self.assertEqual(cp.array("param/v").shape, (1,), "A 1-element vector should stay a vector")

    def test_checkpoint_file_load_missing_is_data_problem(self):
        result = CheckpointFile(os.path.join(self.folder, "none.npz")).load()
        self.assertEqual(
            result.fold(lambda p: p.kind(), lambda c: None), "data",
            "A missing checkpoint should be a data problem"
        )

    def test_checkpoint_file_rejects_foreign_format(self):
        path = os.path.join(self.folder, "other.npz")
        with open(path, "wb") as f:
            np.savez(f, manifest=np.array(json.dumps({"format": "other", "version": 1})))
        result = CheckpointFile(path).load()
        self.assertEqual(
            result.fold(lambda p: p.kind(), lambda c: None), "compatibility",
            "A foreign archive should be a compatibility problem"
        )

    def test_checkpoint_file_rejects_future_version(self):
        path = os.path.join(self.folder, "future.npz")
        document = {"format": "darts-checkpoint", "version": 99, "arrays": []}
        with open(path, "wb") as f:
            np.savez(f, manifest=np.array(json.dumps(document)))
        result = CheckpointFile(path).load()
        self.assertEqual(
            result.fold(lambda p: p.kind(), lambda c: None), "compatibility",
            "An unknown version should be a compatibility problem"
        )

    def test_checkpoint_file_rejects_garbage(self):
        path = os.path.join(self.folder, "garbage.npz")
        with open(path, "w") as f:
            f.write("not a zip")
        self.assertFalse(
            CheckpointFile(path).load().is_right(),
            "A corrupt file should load as Left"
        )


if __name__ == "__main__":
    unittest.main()
