# -*- coding: utf-8 -*-
"""
One method per command line command.

Every command writes the resolved configuration into its output
directory; per-seed outputs go under ``seed-<n>/``.

Example:
    >>> Commands(config, args).run("train")
    >>> sorted(os.listdir("runs"))
    ['config.resolved.json', 'seed-0', 'seed-1', 'summary.json']
"""
import glob
import logging
import os
import re

import numpy as np

from darts_mtsad.app.export import ArtifactFolder, read_json
from darts_mtsad.data.noise import inject_noise
from darts_mtsad.data.scaling import Standardization, apply_stats, standardize
from darts_mtsad.data.source import CsvSink, CsvSource
from darts_mtsad.data.synthetic import generate_synthetic
from darts_mtsad.data.windows import make_samples
from darts_mtsad.model.darts import DartsModel
from darts_mtsad.result.errors import ConfigurationError, ContractError
from darts_mtsad.result.optional import Empty, Some
from darts_mtsad.scoring.baseline import zscore_scores
from darts_mtsad.scoring.evaluation import average_f1, evaluate
from darts_mtsad.scoring.robustness import Comparison
from darts_mtsad.scoring.scorer import Scorer, fit_calibration
from darts_mtsad.sync.runner import SeedRunner
from darts_mtsad.tensor.checkpoint import CheckpointFile
from darts_mtsad.train.trainer import Trainer


_log = logging.getLogger(__name__)

CHECKPOINT = "checkpoint.npz"
SEED_FOLDER = re.compile(r"^seed-(\d+)$")


class Commands:
    """
    Runs commands against a resolved configuration.

    Example:
        >>> Commands(config, args).run("generate-synthetic")
    """

    def __init__(self, config, args):
        """
        Create Commands.

        Args:
            config: RunConfig
            args: argparse Namespace with command-only options
        """
        self._config = config
        self._args = args
        self._out = ArtifactFolder(config.out())

    def run(self, command):
        """
        Run one command.

        Args:
            command: Command name

        Raises:
            DartsError: With the problem that stopped the command
        """
        handlers = {
            "train": self.train,
            "score": self.score,
            "eval": self.evaluate,
            "export-graphs": self.export_graphs,
            "inject-noise": self.inject_noise,
            "generate-synthetic": self.generate_synthetic,
            "baseline": self.baseline,
            "compare": self.compare,
        }
        if command not in handlers:
            raise ContractError("Unknown command", {"command": command})
        self._out.document("config.resolved.json", "config", self._config.snapshot())
        _log.info("Running %s into %s", command, self._out.path())
        handlers[command]()

    def data(self):
        """
        Load the training series and the optional test series.

        CSV paths take precedence over the synthetic block.

        Returns:
            Tuple (TimeSeriesDataset, Optional[TimeSeriesDataset])

        Raises:
            ConfigurationError: If no data source is configured
            FormatError: If a file cannot be read
        """
        config = self._config
        if config.train_path().is_present():
            train = CsvSource(
                config.train_path().otherwise(None), config.labels_in_train()
            ).load().unwrap()
            test = config.test_path().map(
                lambda path: CsvSource(path, config.labels_in_test()).load().unwrap()
            )
            return train, test
        if config.synthetic().is_present():
            bundle = self._synthetic()
            return bundle.train(), Some(bundle.test())
        raise ConfigurationError("No data source, set train-path or synthetic", {})

    def _synthetic(self):
        block = self._config.synthetic().otherwise(None)
        return generate_synthetic(
            block["channels"], block["length"], self._config.anomaly_spec(),
            np.random.default_rng(block["seed"]), drivers=block["drivers"],
            window=self._config.window(), history=self._config.history(),
            noise=block["noise"]
        )

    def _test(self):
        _, test = self.data()
        return test.fold(_missing_test, lambda t: t)

    def train(self):
        """
        Train one model per seed and write checkpoints, histories and a summary.
        """
        config = self._config
        train, _ = self.data()
        scaled, _ = standardize(train, [])
        stats = scaled.stats().otherwise(None)
        samples = make_samples(scaled, config.window(), config.history(), config.stride())
        arch = config.architecture(train.width())
        trainer = Trainer(config.train_config())
        names = train.names()

        def job(seed):
            model = DartsModel.create(arch, seed)
            model.with_stats(stats)
            result = trainer.fit(model, samples, seed)
            fit_calibration(model, result.validation(), config.score_batch())
            folder = self._out.child("seed-%d" % seed)
            model.save(CheckpointFile(folder.file(CHECKPOINT)), names, seed)
            folder.history(result.history())
            best = result.history().records()[result.best_epoch()]
            return {
                "seed": seed,
                "epochs": len(result.history()),
                "best_epoch": result.best_epoch(),
                "val_loss": best.val_loss(),
                "val_nll": best.val_nll(),
            }

        outcomes = SeedRunner.threads(config.workers()).run(config.seeds(), job)
        runs = [o.fold(lambda p: None, lambda r: r) for _, o in outcomes]
        done = [r for r in runs if r is not None]
        failed = [(s, o) for s, o in outcomes if not o.is_right()]
        self._out.document("summary.json", "summary", {
            "seeds": [s for s, _ in outcomes],
            "runs": done,
            "failed": [s for s, _ in failed],
            "mean_val_loss": float(np.mean([r["val_loss"] for r in done])) if done else None,
            "mean_val_nll": float(np.mean([r["val_nll"] for r in done])) if done else None,
        })
        if failed:
            failed[0][1].unwrap()

    def checkpoints(self):
        """
        Resolve --checkpoint to (label, path) pairs.

        A file is used as is; a directory contributes every
        seed-<n>/checkpoint.npz, narrowed by --seed when given.

        Returns:
            List of (folder label or None, path)

        Raises:
            ContractError: If nothing is found
        """
        given = self._args.checkpoint or self._config.out()
        if os.path.isfile(given):
            return [(None, given)]
        found = []
        for path in sorted(glob.glob(os.path.join(given, "seed-*", CHECKPOINT))):
            label = os.path.basename(os.path.dirname(path))
            match = SEED_FOLDER.match(label)
            if match is None:
                continue
            if self._args.seed is not None and int(match.group(1)) != self._args.seed:
                continue
            found.append((int(match.group(1)), label, path))
        if not found:
            raise ContractError("No checkpoint found", {"path": given})
        return [(label, path) for _, label, path in sorted(found)]

    def _model(self, path, channels):
        model, names = DartsModel.load(
            CheckpointFile(path), self._config.architecture(channels)
        ).unwrap()
        return model, names

    def _scaled(self, model, dataset):
        stats = model.stats().fold(_missing_stats, lambda s: s)
        if stats.width() != dataset.width():
            raise ContractError(
                "Checkpoint statistics do not match the series",
                {"stats": stats.width(), "series": dataset.width()}
            )
        return apply_stats(dataset, stats)

    def _score_all(self, labeled):
        test = self._test()
        if labeled and not test.labels().is_present():
            raise ContractError("Evaluation needs a labeled test series", {})
        reports = []
        for label, path in self.checkpoints():
            model, names = self._model(path, test.width())
            scores = Scorer(model, self._config.score_batch()).score(self._scaled(model, test))
            folder = self._out if label is None else self._out.child(label)
            folder.scores(scores, names)
            if not test.labels().is_present():
                continue
            truth = test.labels().otherwise(None)[scores.start():]
            report = evaluate(
                scores.global_scores(), truth, self._config.mode(),
                self._config.threshold(), scores.channel()
            )
            content = report.json()
            content["checkpoint"] = path
            folder.metrics(content)
            reports.append(report)
        return reports

    def score(self):
        """
        Write scores, and metrics when the test series is labeled, per checkpoint.
        """
        self._score_all(False)

    def evaluate(self):
        """
        Score, evaluate and average metrics across checkpoints.
        """
        reports = self._score_all(True)
        self._out.metrics({
            "mode": self._config.mode(),
            "checkpoints": len(reports),
            "precision": float(np.mean([r.precision() for r in reports])),
            "recall": float(np.mean([r.recall() for r in reports])),
            "f1": average_f1(reports),
            "per_checkpoint": [r.json() for r in reports],
        })
        _log.info("Average F1 over %d checkpoints: %.4f", len(reports), average_f1(reports))

    def export_graphs(self):
        """
        Write per-head edge lists, the affinity matrix and channel scores
        of the selected samples.
        """
        label, path = self.checkpoints()[0]
        train, test = self.data()
        series = test.otherwise(train)
        model, names = self._model(path, series.width())
        scaled = self._scaled(model, series)
        arch = model.architecture()
        samples = make_samples(scaled, arch.window(), arch.history(), 1)
        positions = select(self._args.select, samples, series.labels())
        scores = Empty()
        if model.calibration().is_present() and model.fitted():
            scores = Some(Scorer(model, self._config.score_batch()).score(scaled))
        root = self._out if label is None else self._out.child(label)
        rng = np.random.default_rng(0)
        for position in positions:
            origin = int(samples.origins()[position])
            history, window, _ = samples.batch([position])
            out = model.forward(history, window, rng, training=False)
            folder = root.child("sample-%d" % origin)
            for head in range(out.graphs().heads()):
                folder.edges(out.graphs(), 0, head)
            out.affinity().fold(lambda: None, lambda g: folder.affinity(g, 0))
            scores.fold(lambda: None, lambda s: folder.channel_scores(
                s.span(origin - arch.history(), origin + 2 * arch.window()), names
            ))
        _log.info("Exported %d samples", len(positions))

    def inject_noise(self):
        """
        Write a noisy copy of the training series.
        """
        train, _ = self.data()
        seed = self._config.seeds()[0]
        noisy = inject_noise(train, self._config.ratio(), np.random.default_rng(seed))
        CsvSink(self._out.file("train-noisy.csv")).save(noisy)

    def generate_synthetic(self):
        """
        Write a synthetic train/test pair and the driver mixing weights.
        """
        if not self._config.synthetic().is_present():
            raise ConfigurationError("No synthetic block configured", {})
        bundle = self._synthetic()
        CsvSink(self._out.file("train.csv")).save(bundle.train())
        CsvSink(self._out.file("test.csv")).save(bundle.test())
        mixing = bundle.mixing()
        self._out.document("synthetic.json", "synthetic", {
            "channels": bundle.train().names(),
            "mixing": mixing.tolist(),
            "anomaly_ratio": bundle.test().anomaly_ratio(),
        })

    def baseline(self):
        """
        Evaluate the z-score detector on the span the model scores.
        """
        train, test = self.data()
        test = test.fold(_missing_test, lambda t: t)
        if not test.labels().is_present():
            raise ContractError("Evaluation needs a labeled test series", {})
        stats = Standardization.fit(train.values())
        start = self._config.history() + self._config.window()
        scores = zscore_scores(apply_stats(test, stats), start)
        folder = self._out.child("baseline")
        folder.scores(scores, test.names())
        report = evaluate(
            scores.global_scores(), test.labels().otherwise(None)[start:],
            self._config.mode(), self._config.threshold()
        )
        folder.metrics(report.json())

    def compare(self):
        """
        Report the F1 lost by training on noisy data.
        """
        if not self._args.clean or not self._args.noisy:
            raise ContractError("Compare needs --clean and --noisy metrics", {})
        clean = read_json(self._args.clean).unwrap()
        noisy = read_json(self._args.noisy).unwrap()
        comparison = Comparison.of(clean, noisy)
        self._out.document("comparison.json", "comparison", comparison.json())
        _log.info("F1 degradation under noise: %.4f", comparison.degradation())


def select(selector, samples, labels):
    """
    Resolve a sample selector to positions in a SampleSet.

    Args:
        selector: normal, anomalous, an origin INDEX, START:END origins, or
            None for the first sample
        samples: Stride-1 SampleSet
        labels: Optional[L labels] of the series

    Returns:
        List of positions

    Raises:
        ContractError: If the selector is malformed or selects nothing
    """
    origins = samples.origins()
    window = samples.window()
    if selector is None:
        chosen = [0]
    elif selector in ("normal", "anomalous"):
        flags = labels.fold(lambda: _missing_labels(selector), lambda v: v)
        wanted = selector == "anomalous"
        chosen = []
        for position, origin in enumerate(origins):
            hit = bool(flags[origin:origin + 2 * window].any())
            if hit == wanted:
                chosen = [position]
                break
    else:
        chosen = _origins(selector, origins)
    if not chosen:
        raise ContractError("Selection matches no sample", {"select": selector})
    return chosen


def _origins(selector, origins):
    try:
        if ":" in selector:
            begin, end = (int(part) for part in selector.split(":", 1))
        else:
            begin = int(selector)
            end = begin + 1
    except ValueError:
        raise ContractError("Malformed sample selector", {"select": selector})
    return [int(p) for p in np.flatnonzero((origins >= begin) & (origins < end))]


def _missing_test():
    raise ContractError("No test series, set test-path or synthetic", {})


def _missing_stats():
    raise ContractError("Checkpoint has no standardization statistics", {})


def _missing_labels(selector):
    raise ContractError("Selector needs a labeled series", {"select": selector})
