# -*- coding: utf-8 -*-
"""
CLI argument parser for the anomaly detector.

Example:
    >>> args = ArgumentParser().parse(["train", "--config", "config.json", "--seed", "3"])
    >>> args.command, args.seed
    ('train', 3)
"""
import argparse

from darts_mtsad.result.errors import UsageError


COMMANDS = (
    ("train", "Train one model per seed"),
    ("score", "Write anomaly scores of the test series"),
    ("eval", "Score and evaluate, averaging metrics across checkpoints"),
    ("export-graphs", "Write learned graphs and channel scores of selected samples"),
    ("inject-noise", "Write a noise-corrupted copy of the training series"),
    ("generate-synthetic", "Write a synthetic train/test pair"),
    ("baseline", "Evaluate the z-score reference detector"),
    ("compare", "Compare clean and noise-trained metrics"),
)


class _Parser(argparse.ArgumentParser):
    """argparse parser that raises instead of exiting."""

    def error(self, message):
        raise UsageError(message, {"prog": self.prog})


class ArgumentParser:
    """
    Parses command line arguments.

    Every option defaults to None so that a configuration file value
    applies unless the flag is given.

    Example:
        >>> ArgumentParser().parse(["eval", "--mode", "fixed", "--threshold", "2.5"]).threshold
        2.5
    """

    def __init__(self):
        self._parser = _Parser(
            prog="darts-mtsad",
            description="Dual-path multivariate time series anomaly detection"
        )
        self._add()

    def _add(self):
        """
        Add one subcommand per command with the shared options.
        """
        commands = self._parser.add_subparsers(dest="command", metavar="COMMAND")
        commands.required = True
        for name, text in COMMANDS:
            sub = commands.add_parser(name, help=text, description=text)
            self._common(sub)

    def _common(self, parser):
        parser.add_argument(
            "--config",
            default=None,
            help="Path to JSON configuration file (default config.json)"
        )
        parser.add_argument("--seed", type=int, default=None, help="Run only this seed")
        parser.add_argument("--out", default=None, help="Output directory")
        parser.add_argument("--train-path", default=None, help="Training CSV")
        parser.add_argument("--test-path", default=None, help="Test CSV")
        parser.add_argument(
            "--checkpoint",
            default=None,
            help="Checkpoint file, or a directory of seed-<n>/checkpoint.npz"
        )
        parser.add_argument(
            "--mode",
            choices=["best_f1", "fixed"],
            default=None,
            help="Threshold selection"
        )
        parser.add_argument(
            "--threshold", type=float, default=None, help="Threshold of fixed mode"
        )
        parser.add_argument(
            "--ratio", type=float, default=None,
            help="Noise standard deviation relative to each channel's"
        )
        parser.add_argument(
            "--select",
            default=None,
            help="Samples to export: normal, anomalous, INDEX or START:END"
        )
        parser.add_argument(
            "--workers", type=int, default=None, help="Concurrent seed runs"
        )
        parser.add_argument("--clean", default=None, help="Metrics of the clean run")
        parser.add_argument("--noisy", default=None, help="Metrics of the noisy run")
        parser.add_argument("--log-level", default=None, help="Logging level")

    def parse(self, argv):
        """
        Parse command line arguments.

        Args:
            argv: List of argument strings

        Returns:
            argparse Namespace

        Raises:
            UsageError: If the arguments are malformed
        """
        return self._parser.parse_args(argv)
