# -*- coding: utf-8 -*-
"""
Tests for the command line entry point.
"""
import json
import logging
import os
import shutil
import tempfile
import unittest

from darts_mtsad.app.export import read_json, read_table
from darts_mtsad.app.main import main

logging.disable(logging.CRITICAL)

TINY = {
    "synthetic": {"channels": 3, "length": 1200, "drivers": 2, "ratio": 0.06, "segments": 2},
    "window": 4, "history": 16, "stride": 8, "latent": 4, "heads": 1,
    "head-dim": 2, "priors": [0.9], "receptive-fields": 1, "epochs": 1,
    "batch": 32, "seeds": [0], "precision": "float64",
}


def _config(root, content):
    path = os.path.join(root, "config-%d.json" % len(os.listdir(root)))
    with open(path, "w") as f:
        json.dump(content, f)
    return path


class TestExitCodes(unittest.TestCase):
    """Tests for exit codes of main."""

    def setUp(self):
        self._root = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self._root, ignore_errors=True)

    def test_main_returns_one_for_unknown_command(self):
        self.assertEqual(main(["bogus"]), 1, "An unknown command should exit with 1")

    def test_main_returns_one_without_command(self):
        self.assertEqual(main([]), 1, "A missing command should exit with 1")

    def test_main_returns_one_for_missing_config_file(self):
        path = os.path.join(self._root, "absent.json")
        self.assertEqual(main(["train", "--config", path]), 1,
                         "A missing configuration file should exit with 1")

    def test_main_returns_one_for_unknown_key(self):
        path = _config(self._root, {"windw": 30, "out": self._root})
        self.assertEqual(main(["train", "--config", path]), 1,
                         "An unknown configuration key should exit with 1")

    def test_main_returns_one_without_data_source(self):
        path = _config(self._root, {"out": self._root})
        self.assertEqual(main(["train", "--config", path]), 1,
                         "Training without data should exit with 1")

    def test_main_returns_two_for_missing_train_file(self):
        path = _config(self._root, {
            "train-path": os.path.join(self._root, "absent.csv"), "out": self._root
        })
        self.assertEqual(main(["train", "--config", path]), 2,
                         "A missing training file should exit with 2")

    def test_main_returns_one_for_compare_without_inputs(self):
        path = _config(self._root, {"out": self._root})
        self.assertEqual(main(["compare", "--config", path]), 1,
                         "compare without metrics files should exit with 1")


class TestPipeline(unittest.TestCase):
    """Tests for a small synthetic run through every command."""

    @classmethod
    def setUpClass(cls):
        cls._root = tempfile.mkdtemp()
        cls._out = os.path.join(cls._root, "runs")
        content = dict(TINY)
        content["out"] = cls._out
        cls._path = _config(cls._root, content)
        cls._trained = main(["train", "--config", cls._path])

    @classmethod
    def tearDownClass(cls):
        shutil.rmtree(cls._root, ignore_errors=True)

    def _file(self, *parts):
        return os.path.join(self._out, *parts)

    def test_train_writes_seed_artifacts(self):
        self.assertEqual(self._trained, 0, "Training should exit with 0")
        for name in ("checkpoint.npz", "history.csv"):
            self.assertTrue(os.path.exists(self._file("seed-0", name)), "%s should exist" % name)
        summary = read_json(self._file("summary.json")).unwrap()
        self.assertEqual(summary["failed"], [], "No seed should fail")

    def test_train_writes_resolved_config(self):
        resolved = read_json(self._file("config.resolved.json")).unwrap()
        self.assertEqual((resolved["window"], resolved["history"]), (4, 16),
                         "The resolved configuration should be written")

    def test_eval_writes_scores_and_average_metrics(self):
        self.assertEqual(main(["eval", "--config", self._path]), 0, "eval should exit with 0")
        scores = read_table(self._file("seed-0", "scores.csv")).unwrap()
        self.assertEqual(len(scores), 1200, "Scores should have one row per test timestep")
        self.assertTrue((scores["global"].iloc[:20] == 0).all(), "Steps before h + w should score 0")
        metrics = read_json(self._file("metrics.json")).unwrap()
        self.assertTrue(0.0 <= metrics["f1"] <= 1.0, "Average F1 should lie in [0, 1]")
        self.assertEqual(metrics["checkpoints"], 1, "One checkpoint should be evaluated")

    def test_eval_in_fixed_mode_needs_threshold(self):
        code = main(["eval", "--config", self._path, "--mode", "fixed",
                     "--out", os.path.join(self._root, "fixed")])
        self.assertEqual(code, 1, "Fixed mode without a threshold should exit with 1")

    def test_export_graphs_writes_edges_and_affinity(self):
        out = os.path.join(self._root, "graphs")
        code = main(["export-graphs", "--config", self._path, "--checkpoint", self._out,
                     "--out", out])
        self.assertEqual(code, 0, "export-graphs should exit with 0")
        folder = os.path.join(out, "seed-0", "sample-16")
        edges = read_table(os.path.join(folder, "head-0.csv")).unwrap()
        self.assertEqual(len(edges), 6, "Three channels should give six directed edges")
        self.assertTrue(os.path.exists(os.path.join(folder, "affinity.csv")),
                        "The affinity matrix should be written")

    def test_baseline_writes_metrics(self):
        out = os.path.join(self._root, "baseline")
        self.assertEqual(main(["baseline", "--config", self._path, "--out", out]), 0,
                         "baseline should exit with 0")
        self.assertIn("f1", read_json(os.path.join(out, "baseline", "metrics.json")).unwrap(),
                      "Baseline metrics should carry an F1")

    def test_generate_synthetic_writes_pair(self):
        out = os.path.join(self._root, "data")
        self.assertEqual(main(["generate-synthetic", "--config", self._path, "--out", out]), 0,
                         "generate-synthetic should exit with 0")
        for name in ("train.csv", "test.csv", "synthetic.json"):
            self.assertTrue(os.path.exists(os.path.join(out, name)), "%s should exist" % name)

    def test_inject_noise_then_train_from_csv(self):
        data = os.path.join(self._root, "noisy-data")
        main(["generate-synthetic", "--config", self._path, "--out", data])
        out = os.path.join(self._root, "noisy")
        code = main(["inject-noise", "--config", self._path, "--out", out,
                     "--train-path", os.path.join(data, "train.csv"), "--ratio", "0.5"])
        self.assertEqual(code, 0, "inject-noise should exit with 0")
        self.assertTrue(os.path.exists(os.path.join(out, "train-noisy.csv")),
                        "The noisy series should be written")

    def test_compare_writes_degradation(self):
        clean = _config(self._root, {"f1": 0.9})
        noisy = _config(self._root, {"f1": 0.8})
        out = os.path.join(self._root, "compare")
        code = main(["compare", "--config", self._path, "--clean", clean,
                     "--noisy", noisy, "--out", out])
        self.assertEqual(code, 0, "compare should exit with 0")
        comparison = read_json(os.path.join(out, "comparison.json")).unwrap()
        self.assertAlmostEqual(comparison["degradation"], 0.1, places=9,
                               msg="Degradation should be clean minus noisy F1")


if __name__ == "__main__":
    unittest.main()
