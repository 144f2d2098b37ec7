# -*- coding: utf-8 -*-
"""
Long-term path: positional history encoding, window pooling, decayed
temporal affinity and multi-receptive-field propagation.

Example:
    >>> path = LongTermPath(params, arch, rng)
    >>> encoded = path.encode_history(Tensor(history))      # B x N x d x h
    >>> pooled = pool_windows(encoded, arch.window())      # B x N x d x T
    >>> graph = path.build_affinity(pooled)
    >>> path.propagate_multiscale(graph, pooled).shape()
    (2, 5, 64, 10)
"""
import numpy as np

from darts_mtsad.domain.graph import AffinityGraph
from darts_mtsad.model.norm import EPSILON, feature_norm, standardize_axis
from darts_mtsad.model.sarm import lift
from darts_mtsad.result.errors import ConfigurationError, DegenerateContextError
from darts_mtsad.tensor import ops
from darts_mtsad.tensor.tensor import Tensor


def positional_table(length, width):
    """
    Sinusoidal encodings, one row per position.

    Even features take sin(p / 10000^(2i/d)), odd features the matching cosine.

    Args:
        length: Number of positions
        width: Feature count d

    Returns:
        length x width array
    """
    positions = np.arange(length)[:, None]
    pairs = np.arange(0, width, 2)
    rates = np.power(10000.0, -pairs / float(width))
    table = np.zeros((length, width))
    table[:, 0::2] = np.sin(positions * rates)
    table[:, 1::2] = np.cos(positions * rates)[:, :width // 2]
    return table


def decay_matrix(windows, decay):
    """
    Bidirectional temporal decay with entries decay ** |i - j|.

    Args:
        windows: T
        decay: Factor in [0, 1]

    Returns:
        Symmetric T x T array with unit diagonal
    """
    index = np.arange(windows)
    return np.power(float(decay), np.abs(index[:, None] - index[None, :]).astype(np.float64))


def pool_windows(encoded, window):
    """
    Average non-overlapping windows along time.

    Args:
        encoded: Tensor B x N x d x h
        window: w, dividing h

    Returns:
        Tensor B x N x d x T with T = h / w

    Raises:
        ConfigurationError: If w does not divide h
    """
    b, n, d, h = encoded.shape()
    if window < 1 or h % window:
        raise ConfigurationError(
            "History must be a multiple of the window", {"history": h, "window": window}
        )
    return encoded.reshape(b, n, d, h // window, window).mean(axis=-1)


class LongTermPath:
    """
    History encoder and temporal window graph.

    Example:
        >>> path.decay()[0, 2]
        0.48999999999999994
    """

    def __init__(self, params, arch, rng, prefix="lsgm"):
        """
        Create a LongTermPath and register its parameters.

        Args:
            params: ParameterSet
            arch: Architecture
            rng: numpy.random.Generator for initialization
            prefix: Parameter name prefix
        """
        d = arch.latent()
        self._arch = arch
        self._dtype = params.dtype()
        self._lift_weight = params.add(prefix + ".encode.weight", rng.uniform(-1.0, 1.0, size=d))
        self._lift_bias = params.zeros(prefix + ".encode.bias", (d,))
        self._affinity = params.glorot(prefix + ".affinity.weight", (d, d), rng)
        self._scales = []
        for r in range(1, arch.receptive_fields() + 1):
            self._scales.append((
                params.glorot("%s.scale%d.weight" % (prefix, r), (d, d), rng),
                params.zeros("%s.scale%d.bias" % (prefix, r), (d,)),
            ))
        self._fuse = None
        if arch.fusion_mode() == "concat":
            self._fuse = (
                params.glorot(prefix + ".fuse.weight", (arch.receptive_fields() * d, d), rng),
                params.zeros(prefix + ".fuse.bias", (d,)),
            )
        self._alpha = params.ones(prefix + ".norm.alpha", (d,))
        self._beta = params.zeros(prefix + ".norm.beta", (d,))
        self._table = positional_table(arch.history(), d).T.astype(self._dtype)
        self._decay = decay_matrix(arch.pooled(), arch.decay()).astype(self._dtype)

    def table(self):
        """
        Get the positional encodings.

        Returns:
            d x h array
        """
        return self._table

    def decay(self):
        return self._decay

    def encode_history(self, history):
        """
        Lift the history and add positional encodings along time.

        Args:
            history: Tensor B x N x h

        Returns:
            Tensor B x N x d x h
        """
        lifted = lift(
            history, self._lift_weight, self._lift_bias,
            self._arch.channels(), self._arch.history()
        )
        return lifted + self._table

    def build_affinity(self, pooled):
        """
        Score pooled windows against each other.

        Window t is projected by W, flattened over channels and features
        and compared by scaled dot product. LeakyReLU, a self-masked row
        softmax and the decay follow.

        Args:
            pooled: Tensor B x N x d x T

        Returns:
            AffinityGraph

        Raises:
            DegenerateContextError: If T < 2
        """
        b, n, d, windows = pooled.shape()
        if windows < 2:
            raise DegenerateContextError(
                "Affinity needs at least two pooled windows", {"windows": windows}
            )
        tokens = (pooled.transpose(0, 3, 1, 2) @ self._affinity).reshape(b, windows, n * d)
        scores = (tokens @ tokens.transpose(0, 2, 1)) / np.sqrt(n * d)
        raw = ops.softmax_rows(ops.leaky_relu(scores, 0.01), ~np.eye(windows, dtype=bool))
        decay = self._decay if windows == self._decay.shape[0] else decay_matrix(
            windows, self._arch.decay()
        ).astype(self._dtype)
        return AffinityGraph(raw * decay, raw, decay)

    def propagate_multiscale(self, graph, pooled):
        """
        Propagate normalized windows through powers of the affinity.

        Args:
            graph: AffinityGraph over T windows
            pooled: Tensor B x N x d x T

        Returns:
            Tensor B x N x d x T
        """
        b, n, d, windows = pooled.shape()
        normed = standardize_axis(pooled, axis=-1, eps=EPSILON)
        flat = normed.transpose(0, 3, 1, 2).reshape(b, windows, n * d)
        weights = graph.weights()
        power = weights
        scales = []
        for r, (theta, bias) in enumerate(self._scales):
            if r > 0:
                power = power @ weights
            spread = (power @ flat).reshape(b, windows, n, d)
            scales.append(spread @ theta + bias)
        if self._fuse is None:
            fused = scales[0]
            for extra in scales[1:]:
                fused = fused + extra
        else:
            fused = ops.concat(scales, axis=-1) @ self._fuse[0] + self._fuse[1]
        out = feature_norm(fused, self._alpha, self._beta, EPSILON, self._arch.literal_norm())
        return out.transpose(0, 2, 3, 1)

    def forward(self, history):
        """
        Run the whole path on a batch of histories.

        Args:
            history: Tensor B x N x h

        Returns:
            Tuple (Tensor B x N x d x T, AffinityGraph)
        """
        pooled = pool_windows(self.encode_history(history), self._arch.window())
        graph = self.build_affinity(pooled)
        return self.propagate_multiscale(graph, pooled), graph
