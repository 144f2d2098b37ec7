# -*- coding: utf-8 -*-
"""
Configuration loading, merging and validation.

Example:
    >>> file = JsonConfig("config.json").load().fold(lambda p: {}, lambda c: c)
    >>> config = RunConfig.resolve(file, args).unwrap()
    >>> config.window(), config.seeds()
    (30, [0, 1, 2, 3, 4, 5])
"""
import json
import logging
import os

from darts_mtsad.data.synthetic import KINDS, AnomalySpec
from darts_mtsad.model.architecture import Architecture
from darts_mtsad.result.either import Right, Left, Problem
from darts_mtsad.result.errors import ConfigurationError, DartsError
from darts_mtsad.result.optional import Optional
from darts_mtsad.train.trainer import TrainConfig


_log = logging.getLogger(__name__)

DEFAULT_PATH = "config.json"

DEFAULTS = {
    "train-path": None,
    "test-path": None,
    "labels-in-train": False,
    "labels-in-test": True,
    "synthetic": None,
    "window": 30,
    "history": 300,
    "stride": 5,
    "latent": 64,
    "heads": 3,
    "head-dim": 64,
    "priors": [0.9, 0.05, 0.05],
    "temperature": 0.5,
    "hard-sampling": True,
    "diffusion-steps": 2,
    "bidirectional": False,
    "isolated-rows": "identity",
    "receptive-fields": 2,
    "decay": 0.7,
    "key-dim": None,
    "fusion-mode": "sum",
    "literal-norm": False,
    "disable-lsgm": False,
    "disable-fusion-attention": False,
    "kl-form": "bernoulli",
    "precision": "float32",
    "epochs": 200,
    "batch": 64,
    "grad-clip": 1.0,
    "lr": 1e-3,
    "lr-decay": 0.8,
    "plateau": 5,
    "min-lr": 1e-6,
    "patience": 20,
    "weight-decay": 1e-4,
    "validation": 0.1,
    "seeds": [0, 1, 2, 3, 4, 5],
    "workers": 1,
    "mode": "best_f1",
    "threshold": None,
    "ratio": 0.5,
    "score-batch": 64,
    "log-level": "INFO",
    "out": "runs",
}

TYPES = {
    "train-path": str, "test-path": str, "labels-in-train": bool,
    "labels-in-test": bool, "synthetic": dict, "window": int, "history": int,
    "stride": int, "latent": int, "heads": int, "head-dim": int, "priors": list,
    "temperature": float, "hard-sampling": bool, "diffusion-steps": int,
    "bidirectional": bool, "isolated-rows": str, "receptive-fields": int,
    "decay": float, "key-dim": int, "fusion-mode": str, "literal-norm": bool,
    "disable-lsgm": bool, "disable-fusion-attention": bool, "kl-form": str,
    "precision": str, "epochs": int, "batch": int, "grad-clip": float,
    "lr": float, "lr-decay": float, "plateau": int, "min-lr": float,
    "patience": int, "weight-decay": float, "validation": float,
    "seeds": list, "workers": int, "mode": str, "threshold": float,
    "ratio": float, "score-batch": int, "log-level": str, "out": str,
}

SYNTHETIC = {
    "channels": 120,
    "length": 20000,
    "drivers": 4,
    "ratio": 0.06,
    "kinds": list(KINDS),
    "segments": None,
    "noise": 0.1,
    "seed": 0,
}


class JsonConfig:
    """
    Loads configuration from a JSON file.

    Example:
        >>> JsonConfig("config.json").load().is_right()
        True
    """

    def __init__(self, path):
        """
        Create a JsonConfig.

        Args:
            path: Path to JSON configuration file
        """
        self._path = path

    def path(self):
        return self._path

    def load(self):
        """
        Load configuration from file.

        Returns:
            Either[Problem, dict] with configuration values
        """
        if not os.path.exists(self._path):
            return Left(Problem(
                "Configuration file not found",
                {"path": self._path},
                "config"
            ))
        try:
            with open(self._path, "r") as f:
                data = json.load(f)
        except ValueError as e:
            return Left(Problem(
                "Invalid JSON in configuration file",
                {"path": self._path, "error": str(e)},
                "config"
            ))
        except IOError as e:
            return Left(Problem(
                "Cannot read configuration file",
                {"path": self._path, "error": str(e)},
                "config"
            ))
        if not isinstance(data, dict):
            return Left(Problem(
                "Configuration must be a JSON object",
                {"path": self._path},
                "config"
            ))
        return Right(data)

    @staticmethod
    def of(path):
        """
        Load an explicit path, or config.json when present.

        Args:
            path: Path given on the command line, or None

        Returns:
            Either[Problem, dict], an empty dict without any file
        """
        if path is None:
            if not os.path.exists(DEFAULT_PATH):
                return Right({})
            path = DEFAULT_PATH
        return JsonConfig(path).load()

    def __repr__(self):
        return "JsonConfig(%r)" % self._path


class MergedConfig:
    """
    Merges configuration from file and CLI arguments.

    CLI arguments override file values; file keys may use dashes or
    underscores.

    Example:
        >>> MergedConfig({"score-batch": 12}, args).get("score_batch", 64)
        12
    """

    def __init__(self, file, cli):
        """
        Create a MergedConfig.

        Args:
            file: Dict from JSON file (or empty)
            cli: Namespace from argparse
        """
        self._file = file
        self._cli = cli

    def get(self, key, default):
        """
        Get configuration value.

        CLI takes precedence, then file, then default.

        Args:
            key: Configuration key (underscore format)
            default: Default value if not found

        Returns:
            Configuration value
        """
        cli_val = getattr(self._cli, key, None)
        if cli_val is not None:
            return cli_val
        file_key = key.replace("_", "-")
        if file_key in self._file:
            return self._file[file_key]
        if key in self._file:
            return self._file[key]
        return default


class RunConfig:
    """
    Validated run settings with one accessor per documented key.

    Unknown keys are rejected by name. ``--seed`` narrows the seed list
    to that one seed.

    Example:
        >>> config = RunConfig({"decay": 0.8}, args)
        >>> config.architecture(51).decay()
        0.8
        >>> RunConfig({"windw": 30}, args)
        Traceback (most recent call last):
        ...
        ConfigurationError: Unknown configuration key (key=windw)
    """

    def __init__(self, file, cli):
        """
        Create a RunConfig.

        Args:
            file: Dict from JSON file
            cli: Namespace from argparse

        Raises:
            ConfigurationError: If a key is unknown or a value has the wrong type
        """
        normal = {}
        for key, value in file.items():
            name = str(key).replace("_", "-")
            if name not in DEFAULTS:
                raise ConfigurationError("Unknown configuration key", {"key": key})
            normal[name] = value
        merged = MergedConfig(normal, cli)
        values = {}
        for name, default in DEFAULTS.items():
            values[name] = _checked(name, merged.get(name.replace("-", "_"), default))
        seed = getattr(cli, "seed", None)
        if seed is not None:
            values["seeds"] = [int(seed)]
        if not values["seeds"] or not all(_integer(s) for s in values["seeds"]):
            raise ConfigurationError("Seeds must be a non-empty list of integers",
                                     {"seeds": values["seeds"]})
        if values["workers"] < 1 or values["score-batch"] < 1 or values["stride"] < 1:
            raise ConfigurationError(
                "Must be a positive integer",
                {"workers": values["workers"], "score-batch": values["score-batch"],
                 "stride": values["stride"]}
            )
        if values["mode"] not in ("best_f1", "fixed"):
            raise ConfigurationError("Unknown evaluation mode", {"mode": values["mode"]})
        if values["synthetic"] is not None:
            values["synthetic"] = _synthetic(values["synthetic"])
        self._values = values

    @staticmethod
    def resolve(file, cli):
        """
        Validate a merged configuration.

        Args:
            file: Dict from JSON file
            cli: Namespace from argparse

        Returns:
            Either[Problem, RunConfig]
        """
        try:
            config = RunConfig(file, cli)
            config.architecture(2)
            config.train_config()
            return Right(config)
        except DartsError as e:
            return Left(e.problem())

    def get(self, key):
        return self._values[key]

    def train_path(self):
        return Optional.of(self._values["train-path"])

    def test_path(self):
        return Optional.of(self._values["test-path"])

    def labels_in_train(self):
        return self._values["labels-in-train"]

    def labels_in_test(self):
        return self._values["labels-in-test"]

    def synthetic(self):
        """
        Get the synthetic data block.

        Returns:
            Optional[dict] with every synthetic key filled in
        """
        return Optional.of(self._values["synthetic"])

    def anomaly_spec(self):
        block = self._values["synthetic"] or dict(SYNTHETIC)
        return AnomalySpec(block["ratio"], block["kinds"], block["segments"])

    def window(self):
        return self._values["window"]

    def history(self):
        return self._values["history"]

    def stride(self):
        return self._values["stride"]

    def seeds(self):
        return list(self._values["seeds"])

    def workers(self):
        return self._values["workers"]

    def mode(self):
        return self._values["mode"]

    def threshold(self):
        return Optional.of(self._values["threshold"])

    def ratio(self):
        return self._values["ratio"]

    def score_batch(self):
        return self._values["score-batch"]

    def log_level(self):
        return self._values["log-level"]

    def out(self):
        return self._values["out"]

    def architecture(self, channels):
        """
        Build the model architecture for a channel count.

        Args:
            channels: N

        Returns:
            Architecture

        Raises:
            ConfigurationError: If a model key is out of range
            ParameterError: If a prior, the decay or the temperature is out of range
        """
        v = self._values
        return Architecture(
            channels=channels, window=v["window"], history=v["history"],
            latent=v["latent"], heads=v["heads"], head_dim=v["head-dim"],
            priors=tuple(v["priors"]), temperature=v["temperature"],
            hard_sampling=v["hard-sampling"], diffusion_steps=v["diffusion-steps"],
            bidirectional=v["bidirectional"], isolated_rows=v["isolated-rows"],
            receptive_fields=v["receptive-fields"], decay=v["decay"],
            key_dim=v["key-dim"], fusion_mode=v["fusion-mode"],
            literal_norm=v["literal-norm"], disable_lsgm=v["disable-lsgm"],
            disable_fusion_attention=v["disable-fusion-attention"],
            kl_form=v["kl-form"], precision=v["precision"],
        )

    def train_config(self):
        v = self._values
        return TrainConfig(
            epochs=v["epochs"], batch=v["batch"], grad_clip=v["grad-clip"],
            lr=v["lr"], lr_decay=v["lr-decay"], plateau=v["plateau"],
            min_lr=v["min-lr"], patience=v["patience"],
            weight_decay=v["weight-decay"], validation=v["validation"],
        )

    def snapshot(self):
        """
        Get every resolved value.

        Returns:
            Dict usable as a --config file that reproduces this run
        """
        document = json.loads(json.dumps(self._values))
        return document

    def __repr__(self):
        return "RunConfig(w=%d, h=%d, seeds=%s)" % (
            self.window(), self.history(), self.seeds()
        )


def _integer(value):
    return isinstance(value, int) and not isinstance(value, bool)


def _checked(name, value):
    """
    Check one value against its documented type.

    Args:
        name: Dash-form key
        value: Candidate value

    Returns:
        The value, ints widened to float where a float is expected

    Raises:
        ConfigurationError: Naming the key
    """
    if value is None:
        if DEFAULTS[name] is None:
            return None
        raise ConfigurationError("Value must not be null", {"key": name})
    kind = TYPES[name]
    if kind is float and _integer(value):
        return float(value)
    if kind is int and _integer(value):
        return value
    if kind is bool and isinstance(value, bool):
        return value
    if kind in (str, list, dict) and isinstance(value, kind):
        return value
    if kind is float and isinstance(value, float):
        return value
    raise ConfigurationError(
        "Wrong value type", {"key": name, "expected": kind.__name__, "value": value}
    )


def _synthetic(block):
    unknown = sorted(k for k in block if k not in SYNTHETIC)
    if unknown:
        raise ConfigurationError("Unknown synthetic key", {"key": unknown[0]})
    merged = dict(SYNTHETIC)
    merged.update(block)
    for key in ("channels", "length", "drivers", "seed"):
        if not _integer(merged[key]):
            raise ConfigurationError("Wrong value type", {"key": "synthetic." + key})
    merged["kinds"] = list(merged["kinds"])
    return merged
