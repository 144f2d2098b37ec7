# -*- coding: utf-8 -*-
"""
Checkpoint container for named float arrays.

A checkpoint is a NumPy ``.npz`` archive. Entry ``manifest`` holds a JSON
document with the format name, the format version and the ordered array
names; every other entry is one little-endian float64 array stored under
its name.

Example:
    >>> box = CheckpointFile("seed-0/checkpoint.npz")
    >>> box.save({"seed": 0}, {"param/fusion.query": np.eye(2)})
    >>> box.load().map(lambda c: c.names()).unwrap()
    ['param/fusion.query']
"""
import json
import os
import zipfile

import numpy as np

from darts_mtsad.result.either import Right, Left, Problem


FORMAT = "darts-checkpoint"
VERSION = 1


class Checkpoint:
    """
    Loaded checkpoint: manifest plus named arrays.

    Example:
        >>> cp = Checkpoint({"seed": 3}, {"stats/mean": np.zeros(4)})
        >>> cp.meta("seed")
        3
    """

    def __init__(self, manifest, arrays):
        """
        Create a Checkpoint.

        Args:
            manifest: Dict of metadata
            arrays: Dict name -> ndarray
        """
        self._manifest = dict(manifest)
        self._arrays = dict(arrays)

    def names(self):
        return list(self._arrays.keys())

    def array(self, name):
        return self._arrays[name]

    def has(self, name):
        return name in self._arrays

    def arrays(self, prefix):
        """
        Get arrays whose names start with a prefix.

        Args:
            prefix: Name prefix, stripped from the returned keys

        Returns:
            Dict stripped-name -> ndarray, in stored order
        """
        return {
            name[len(prefix):]: value
            for name, value in self._arrays.items()
            if name.startswith(prefix)
        }

    def meta(self, key, default=None):
        return self._manifest.get(key, default)

    def manifest(self):
        return dict(self._manifest)


class CheckpointFile:
    """
    Reads and writes checkpoint archives.

    Example:
        >>> CheckpointFile("/missing.npz").load().is_right()
        False
    """

    def __init__(self, path):
        self._path = path

    def path(self):
        return self._path

    def save(self, manifest, arrays):
        """
        Write manifest and arrays.

        Args:
            manifest: Dict of JSON-serialisable metadata
            arrays: Ordered dict name -> array
        """
        document = dict(manifest)
        document["format"] = FORMAT
        document["version"] = VERSION
        document["arrays"] = list(arrays.keys())
        entries = {
            name: np.array(value, dtype="<f8", order="C")
            for name, value in arrays.items()
        }
        entries["manifest"] = np.array(json.dumps(document, sort_keys=True))
        folder = os.path.dirname(self._path)
        if folder and not os.path.isdir(folder):
            os.makedirs(folder)
        with open(self._path, "wb") as f:
            np.savez(f, **entries)

    def load(self):
        """
        Read the archive.

        Returns:
            Either[Problem, Checkpoint]
        """
        if not os.path.exists(self._path):
            return Left(Problem(
                "Checkpoint file not found",
                {"path": self._path},
                "data"
            ))
        try:
            with np.load(self._path, allow_pickle=False) as archive:
                document = json.loads(str(archive["manifest"]))
                if document.get("format") != FORMAT:
                    return Left(Problem(
                        "Not a checkpoint archive",
                        {"path": self._path},
                        "compatibility"
                    ))
                if document.get("version") != VERSION:
                    return Left(Problem(
                        "Unsupported checkpoint version",
                        {"path": self._path, "version": document.get("version")},
                        "compatibility"
                    ))
                arrays = {
                    name: np.array(archive[name], dtype=np.float64)
                    for name in document["arrays"]
                }
            return Right(Checkpoint(document, arrays))
        except (KeyError, ValueError, OSError, zipfile.BadZipFile) as e:
            return Left(Problem(
                "Cannot read checkpoint",
                {"path": self._path, "error": str(e)},
                "data"
            ))

    def __repr__(self):
        return "CheckpointFile(%r)" % self._path
