# -*- coding: utf-8 -*-
"""
Dual-path detector wiring and checkpoint persistence.

Example:
    >>> model = DartsModel.create(Architecture(channels=5), seed=0)
    >>> out = model.forward(history, window, np.random.default_rng(0), training=False)
    >>> out.prediction().shape()
    (2, 30, 5, 1)
    >>> model.save(CheckpointFile("seed-0/checkpoint.npz"), ["a", "b", "c", "d", "e"])
"""
import logging

import numpy as np

from darts_mtsad.data.scaling import Standardization
from darts_mtsad.domain.loss import LossTerms
from darts_mtsad.model.architecture import Architecture
from darts_mtsad.model.fusion import SoftFusion
from darts_mtsad.model.lsgm import LongTermPath
from darts_mtsad.model.sarm import DiffusionUnit, GraphLearner, WindowEncoder
from darts_mtsad.model.state import ParameterSet
from darts_mtsad.result.either import Right, Left, Problem
from darts_mtsad.result.errors import DartsError, NumericError
from darts_mtsad.result.optional import Empty, Some
from darts_mtsad.scoring.calibration import Calibration
from darts_mtsad.tensor.tensor import Tensor
from darts_mtsad.train.losses import gaussian_nll, kl_loss


_log = logging.getLogger(__name__)

LOG_VAR = "noise.log_var"


class Forward:
    """
    Outputs of one forward pass.

    Example:
        >>> out.affinity().is_present()
        True
    """

    def __init__(self, prediction, graphs, affinity, attention):
        self._prediction = prediction
        self._graphs = graphs
        self._affinity = affinity
        self._attention = attention

    def prediction(self):
        """
        Get the next-window prediction.

        Returns:
            Tensor B x w x N x 1
        """
        return self._prediction

    def graphs(self):
        return self._graphs

    def affinity(self):
        """
        Get the temporal affinity graph.

        Returns:
            Optional[AffinityGraph], Empty without the long path
        """
        return self._affinity

    def attention(self):
        return self._attention


class DartsModel:
    """
    Short-term graph path, long-term affinity path and soft fusion.

    A model is fitted once training has run; it then optionally carries
    the standardization and score calibration it was fitted with.

    Example:
        >>> model.fitted()
        False
        >>> model.parameters().count() > 0
        True
    """

    def __init__(self, arch, params, encoder, learner, diffusion, long_path, fusion):
        self._arch = arch
        self._params = params
        self._encoder = encoder
        self._learner = learner
        self._diffusion = diffusion
        self._long = long_path
        self._fusion = fusion
        self._log_var = params.get(LOG_VAR)
        self._fitted = False
        self._stats = Empty()
        self._calibration = Empty()

    @staticmethod
    def create(arch, seed):
        """
        Build a freshly initialized model.

        Args:
            arch: Architecture
            seed: Integer seed of the initialization

        Returns:
            DartsModel
        """
        rng = np.random.default_rng(seed)
        params = ParameterSet(arch.dtype())
        encoder = WindowEncoder(params, arch, rng)
        learner = GraphLearner(params, arch, rng)
        diffusion = DiffusionUnit(params, arch, rng)
        long_path = None if arch.disable_lsgm() else LongTermPath(params, arch, rng)
        fusion = SoftFusion(params, arch, rng)
        params.zeros(LOG_VAR, ())
        _log.debug("Created %r with %r", arch, params)
        return DartsModel(arch, params, encoder, learner, diffusion, long_path, fusion)

    def architecture(self):
        return self._arch

    def parameters(self):
        return self._params

    def sigma_sq(self):
        return float(np.exp(self._log_var.item()))

    def fitted(self):
        return self._fitted

    def mark_fitted(self):
        self._fitted = True

    def stats(self):
        """
        Get the training standardization.

        Returns:
            Optional[Standardization]
        """
        return self._stats

    def with_stats(self, stats):
        self._stats = Some(stats)

    def calibration(self):
        """
        Get the validation score calibration.

        Returns:
            Optional[Calibration]
        """
        return self._calibration

    def calibrate(self, calibration):
        self._calibration = Some(calibration)

    def _tensor(self, array):
        return Tensor(np.asarray(array, dtype=self._arch.dtype()))

    def forward(self, history, window, rng, training):
        """
        Predict the window that follows each input window.

        Args:
            history: Array B x N x h
            window: Array B x N x w
            rng: numpy.random.Generator for graph sampling
            training: Stochastic graph sampling when True

        Returns:
            Forward
        """
        encoded = self._encoder.forward(self._tensor(window))
        graphs = self._learner.forward(encoded, rng, training)
        short = self._diffusion.forward(encoded, graphs)
        context = None
        affinity = Empty()
        if self._long is not None:
            context, graph = self._long.forward(self._tensor(history))
            affinity = Some(graph)
        first, second = self._fusion.align(short, context)
        fused, attention = self._fusion.cross_attend(first, second)
        return Forward(self._fusion.predict(fused), graphs, affinity, attention)

    def loss(self, history, window, target, rng, training):
        """
        Structure regularizer plus likelihood, both averaged over the batch.

        Args:
            history: Array B x N x h
            window: Array B x N x w
            target: Array B x N x w
            rng: numpy.random.Generator for graph sampling
            training: Stochastic graph sampling when True

        Returns:
            Tuple (LossTerms, Forward)

        Raises:
            NumericError: Naming the kl or nll term when it is not finite
        """
        out = self.forward(history, window, rng, training)
        expected = self._tensor(np.transpose(target, (0, 2, 1))[..., None])
        kl = _term("kl", lambda: kl_loss(
            out.graphs().probabilities(), self._arch.priors(), self._arch.kl_form()
        ))
        nll = _term("nll", lambda: gaussian_nll(
            out.prediction(), expected, self._log_var, batched=True
        ))
        return LossTerms(kl, nll, self.sigma_sq()), out

    def save(self, box, names, seed=None):
        """
        Write parameters, statistics and calibration.

        Args:
            box: CheckpointFile
            names: Channel names
            seed: Optional training seed
        """
        arrays = {"param/" + k: v for k, v in self._params.snapshot().items()}
        self._stats.fold(lambda: None, lambda s: arrays.update({
            "stats/mean": s.mean(), "stats/std": s.std(),
            "stats/constant": s.constant().astype(np.float64),
        }))
        self._calibration.fold(lambda: None, lambda c: arrays.update({
            "calibration/median": c.median(), "calibration/iqr": c.iqr(),
        }))
        box.save({
            "architecture": self._arch.json(),
            "channels": list(names),
            "seed": seed,
            "fitted": self._fitted,
        }, arrays)
        _log.info("Saved checkpoint %s", box.path())

    @staticmethod
    def load(box, arch=None):
        """
        Read a model from a checkpoint.

        Args:
            box: CheckpointFile
            arch: Optional Architecture the checkpoint must agree with

        Returns:
            Either[Problem, (DartsModel, channel names)]
        """
        return box.load().flatmap(lambda cp: DartsModel._restore(cp, arch))

    @staticmethod
    def _restore(checkpoint, expected):
        try:
            stored = Architecture.of(checkpoint.meta("architecture", {}))
            if expected is not None and stored.shape_fields() != expected.shape_fields():
                changed = sorted(
                    k for k, v in stored.shape_fields().items()
                    if expected.shape_fields()[k] != v
                )
                return Left(Problem(
                    "Checkpoint does not match the configured architecture",
                    {"fields": ",".join(changed)},
                    "compatibility"
                ))
            model = DartsModel.create(stored, 0)
            model._params.restore(checkpoint.arrays("param/"))
        except (DartsError, TypeError) as e:
            return Left(Problem(
                "Checkpoint does not match the model",
                {"error": str(e)},
                "compatibility"
            ))
        if checkpoint.has("stats/mean"):
            model.with_stats(Standardization(
                checkpoint.array("stats/mean"), checkpoint.array("stats/std"),
                checkpoint.array("stats/constant") > 0.5
            ))
        if checkpoint.has("calibration/median"):
            model.calibrate(Calibration(
                checkpoint.array("calibration/median"), checkpoint.array("calibration/iqr")
            ))
        if checkpoint.meta("fitted", False):
            model.mark_fitted()
        return Right((model, checkpoint.meta("channels", [])))

    def __repr__(self):
        return "DartsModel(%r, fitted=%s)" % (self._arch, self._fitted)


def _term(name, compute):
    try:
        value = compute()
    except NumericError as e:
        raise NumericError(
            "Loss term is not finite",
            {"term": name, "op": e.problem().context().get("op")}
        )
    if not np.isfinite(value.item()):
        raise NumericError("Loss term is not finite", {"term": name})
    return value
