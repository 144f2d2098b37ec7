# -*- coding: utf-8 -*-
"""
Writers and readers of run artifacts.

Delimited files and JSON documents start with a ``# darts-<kind> v1``
header line (JSON documents carry ``format`` and ``version`` fields
instead).

Example:
    >>> box = ArtifactFolder("runs/seed-0")
    >>> box.history(result.history())
    'runs/seed-0/history.csv'
    >>> box.read_json("metrics.json").map(lambda m: m["f1"]).unwrap()
    0.91
"""
import json
import logging
import os

import numpy as np
import pandas as pd

from darts_mtsad.result.either import Right, Left, Problem


_log = logging.getLogger(__name__)

VERSION = 1


class ArtifactFolder:
    """
    One output directory, created on first write.

    Example:
        >>> ArtifactFolder("runs").child("seed-3").path()
        'runs/seed-3'
    """

    def __init__(self, path):
        self._path = path

    def path(self):
        return self._path

    def child(self, name):
        return ArtifactFolder(os.path.join(self._path, name))

    def file(self, name):
        return os.path.join(self._path, name)

    def _ready(self, name):
        if not os.path.isdir(self._path):
            os.makedirs(self._path)
        return self.file(name)

    def table(self, name, kind, frame):
        """
        Write a delimited table under a version header.

        Args:
            name: File name
            kind: Header kind, as in ``# darts-<kind> v1``
            frame: pandas DataFrame

        Returns:
            Written path
        """
        path = self._ready(name)
        with open(path, "w") as f:
            f.write("# darts-%s v%d\n" % (kind, VERSION))
            frame.to_csv(f, index=False, float_format="%.17g", lineterminator="\n")
        _log.info("Wrote %s", path)
        return path

    def document(self, name, kind, content):
        """
        Write a JSON document with format and version fields.

        Args:
            name: File name
            kind: Document kind
            content: JSON-compatible dict

        Returns:
            Written path
        """
        path = self._ready(name)
        body = {"format": "darts-%s" % kind, "version": VERSION}
        body.update(content)
        with open(path, "w") as f:
            json.dump(body, f, indent=2, sort_keys=True)
            f.write("\n")
        _log.info("Wrote %s", path)
        return path

    def history(self, history):
        frame = pd.DataFrame(history.rows(), columns=list(history.COLUMNS))
        frame["epoch"] = frame["epoch"].astype(int)
        return self.table("history.csv", "history", frame)

    def scores(self, scores, names, name="scores.csv", kind="scores"):
        """
        Write channel and global scores, one row per timestep from 0.

        Timesteps before the first scored one are written as 0.

        Args:
            scores: ChannelScores
            names: Channel names
            name: File name
            kind: Header kind

        Returns:
            Written path
        """
        scores = scores.padded()
        frame = pd.DataFrame(scores.channel(), columns=list(names))
        frame.insert(0, "t", scores.timesteps())
        frame["global"] = scores.global_scores()
        return self.table(name, kind, frame)

    def channel_scores(self, scores, names):
        frame = pd.DataFrame(scores.channel(), columns=list(names))
        frame.insert(0, "t", scores.timesteps())
        return self.table("channel-scores.csv", "channel-scores", frame)

    def edges(self, graphs, sample, head):
        """
        Write the edge list of one head.

        Args:
            graphs: SparseGraphSet
            sample: Batch index of the sample
            head: Head index

        Returns:
            Written path
        """
        frame = pd.DataFrame(
            graphs.edges(sample, head),
            columns=["source", "target", "probability", "sampled"]
        )
        return self.table("head-%d.csv" % head, "edges", frame)

    def affinity(self, graph, sample):
        weights = np.asarray(graph.weights().values()[sample])
        frame = pd.DataFrame(weights, columns=["w%d" % t for t in range(weights.shape[1])])
        return self.table("affinity.csv", "affinity", frame)

    def metrics(self, content):
        return self.document("metrics.json", "metrics", content)

    def read_json(self, name):
        return read_json(self.file(name))

    def __repr__(self):
        return "ArtifactFolder(%r)" % self._path


def read_json(path):
    """
    Read a JSON artifact.

    Args:
        path: File path

    Returns:
        Either[Problem, dict]
    """
    if not os.path.exists(path):
        return Left(Problem("Artifact not found", {"path": path}, "data"))
    try:
        with open(path, "r") as f:
            return Right(json.load(f))
    except ValueError as e:
        return Left(Problem("Invalid JSON artifact", {"path": path, "error": str(e)}, "data"))


def read_table(path):
    """
    Read a delimited artifact, skipping its header line.

    Args:
        path: File path

    Returns:
        Either[Problem, pandas DataFrame]
    """
    if not os.path.exists(path):
        return Left(Problem("Artifact not found", {"path": path}, "data"))
    try:
        return Right(pd.read_csv(path, skiprows=1))
    except (pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        return Left(Problem("Invalid table artifact", {"path": path, "error": str(e)}, "data"))
