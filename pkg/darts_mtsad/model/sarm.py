# -*- coding: utf-8 -*-
"""
Short-term path: window encoding, multi-view sparse graph learning and
diffusion graph recurrence.

All tensors carry a leading batch axis B.

Example:
    >>> encoder = WindowEncoder(params, arch, rng)
    >>> encoded = encoder.forward(Tensor(window))          # B x N x d x w
    >>> graphs = GraphLearner(params, arch, rng).forward(encoded, rng, True)
    >>> hidden = DiffusionUnit(params, arch, rng).forward(encoded, graphs)
    >>> hidden.shape()
    (2, 5, 64, 30)
"""
import numpy as np

from darts_mtsad.domain.graph import SparseGraphSet
from darts_mtsad.result.errors import DimensionError
from darts_mtsad.tensor import ops
from darts_mtsad.tensor.tensor import Tensor


PROBABILITY_FLOOR = 1e-12


class WindowEncoder:
    """
    Shared affine lift of every scalar observation to a d-vector.

    Example:
        >>> WindowEncoder(params, arch, rng).forward(Tensor(np.zeros((1, 5, 30)))).shape()
        (1, 5, 64, 30)
    """

    def __init__(self, params, arch, rng, prefix="sarm.encode"):
        """
        Create a WindowEncoder and register its parameters.

        Args:
            params: ParameterSet
            arch: Architecture
            rng: numpy.random.Generator for initialization
            prefix: Parameter name prefix
        """
        d = arch.latent()
        self._arch = arch
        self._length = arch.window()
        self._weight = params.add(prefix + ".weight", rng.uniform(-1.0, 1.0, size=d))
        self._bias = params.zeros(prefix + ".bias", (d,))

    def forward(self, window):
        """
        Lift a batch of windows.

        Args:
            window: Tensor B x N x w

        Returns:
            Tensor B x N x d x w

        Raises:
            DimensionError: If N or w differ from the architecture
        """
        return lift(window, self._weight, self._bias, self._arch.channels(), self._length)


def lift(series, weight, bias, channels, length):
    """
    Apply a shared 1 -> d affine map along a new feature axis.

    Args:
        series: Tensor B x N x L
        weight: Tensor [d]
        bias: Tensor [d]
        channels: Expected N
        length: Expected L

    Returns:
        Tensor B x N x d x L
    """
    shape = series.shape()
    if len(shape) != 3 or shape[1] != channels or shape[2] != length:
        raise DimensionError(
            "Input does not match the architecture",
            {"shape": shape, "channels": channels, "length": length}
        )
    d = weight.shape()[0]
    column = series.reshape(shape[0], shape[1], 1, shape[2])
    return column * weight.reshape(1, 1, d, 1) + bias.reshape(1, 1, d, 1)


class GraphLearner:
    """
    Per-head channel graphs scored from time-mean node embeddings.

    Head h scores the ordered pair (i, j) as
    sigmoid(q_i . k_j / sqrt(head_dim)) with q = e W_q[h], k = e W_k[h].
    Self-loops are masked, then a two-category Gumbel-Softmax sample over
    (edge, no edge) gives the adjacency.

    Example:
        >>> graphs = learner.forward(encoded, np.random.default_rng(1), False)
        >>> graphs.adjacency().values()[0, 0].diagonal().tolist()
        [0.0, 0.0, 0.0, 0.0, 0.0]
    """

    def __init__(self, params, arch, rng, prefix="sarm.graph"):
        """
        Create a GraphLearner and register its parameters.

        Args:
            params: ParameterSet
            arch: Architecture
            rng: numpy.random.Generator for initialization
            prefix: Parameter name prefix
        """
        shape = (arch.heads(), arch.latent(), arch.head_dim())
        self._arch = arch
        self._query = params.glorot(prefix + ".query", shape, rng)
        self._key = params.glorot(prefix + ".key", shape, rng)
        n = arch.channels()
        self._mask = ~np.eye(n, dtype=bool)
        self._dtype = params.dtype()

    def mask(self):
        """
        Get the self-loop mask M.

        Returns:
            N x N boolean array, False on the diagonal
        """
        return self._mask.copy()

    def probabilities(self, encoded):
        """
        Score every ordered channel pair.

        Args:
            encoded: Tensor B x N x d x w

        Returns:
            Tensor B x H x N x N of masked edge probabilities
        """
        b, n, d, _ = encoded.shape()
        nodes = encoded.mean(axis=3).reshape(b, 1, n, d)
        query = nodes @ self._query
        key = nodes @ self._key
        scores = (query @ key.transpose(0, 1, 3, 2)) / np.sqrt(self._arch.head_dim())
        return ops.sigmoid(scores) * self._mask.astype(self._dtype)

    def forward(self, encoded, rng, training):
        """
        Learn and sample the graphs of a batch.

        Args:
            encoded: Tensor B x N x d x w
            rng: numpy.random.Generator for Gumbel noise
            training: Sample stochastically; otherwise take the argmax

        Returns:
            SparseGraphSet
        """
        probs = self.probabilities(encoded)
        logits = ops.stack([
            ops.log(ops.clip(probs, PROBABILITY_FLOOR, 1.0)),
            ops.log(ops.clip(1.0 - probs, PROBABILITY_FLOOR, 1.0)),
        ], axis=-1)
        if training:
            samples = ops.gumbel_softmax(
                logits, self._arch.temperature(), self._arch.hard_sampling(), rng
            )
        else:
            winner = np.argmax(logits.values(), axis=-1)
            samples = Tensor((np.arange(2) == winner[..., None]).astype(self._dtype))
        adjacency = samples[..., 0] * self._mask.astype(self._dtype)
        return SparseGraphSet(probs, adjacency, samples)


class DiffusionUnit:
    """
    Per-head diffusion-convolutional GRU over the window steps.

    Each gate transforms the stack {P^0 z, P^1 z, ..., P^K z} of its
    input z = [x, h] with one weight block per order, which concatenates
    the diffusion hops and projects back to d in one product. P is the
    row-normalized adjacency of a head. The output averages heads.

    Example:
        >>> unit.forward(encoded, graphs).shape()
        (2, 5, 64, 30)
    """

    def __init__(self, params, arch, rng, prefix="sarm.diffusion"):
        """
        Create a DiffusionUnit and register its parameters.

        Args:
            params: ParameterSet
            arch: Architecture
            rng: numpy.random.Generator for initialization
            prefix: Parameter name prefix
        """
        d = arch.latent()
        heads = arch.heads()
        orders = 1 + arch.supports() * arch.diffusion_steps()
        self._arch = arch
        self._dtype = params.dtype()
        self._gate = params.glorot(prefix + ".gate.weight", (heads, orders * 2 * d, 2 * d), rng)
        self._gate_bias = params.add(prefix + ".gate.bias", np.ones((heads, 1, 2 * d)))
        self._candidate = params.glorot(
            prefix + ".candidate.weight", (heads, orders * 2 * d, d), rng
        )
        self._candidate_bias = params.zeros(prefix + ".candidate.bias", (heads, 1, d))

    def supports(self, adjacency):
        """
        Row-normalize the adjacency of every head.

        Zero-degree rows propagate as identity rows or as zero rows,
        following the architecture.

        Args:
            adjacency: Tensor B x H x N x N

        Returns:
            List of Tensors B x H x N x N (forward walk, then reverse walk
            when bidirectional)
        """
        walks = [adjacency]
        if self._arch.bidirectional():
            walks.append(adjacency.transpose(0, 1, 3, 2))
        return [self._normalize(a) for a in walks]

    def _normalize(self, adjacency):
        degree = adjacency.sum(axis=-1, keepdims=True)
        isolated = (degree.values() == 0).astype(self._dtype)
        walk = adjacency / (degree + isolated)
        if self._arch.isolated_rows() == "identity":
            n = adjacency.shape()[-1]
            walk = walk + np.eye(n, dtype=self._dtype) * isolated
        return walk

    def _convolve(self, z, supports, weight, bias):
        terms = [z]
        for walk in supports:
            hop = z
            for _ in range(self._arch.diffusion_steps()):
                hop = walk @ hop
                terms.append(hop)
        stacked = ops.concat(terms, axis=-1) if len(terms) > 1 else z
        return stacked @ weight + bias

    def forward(self, encoded, graphs, hidden=None):
        """
        Run the recurrence over all window steps.

        Args:
            encoded: Tensor B x N x d x w
            graphs: SparseGraphSet with H heads
            hidden: Optional initial hidden Tensor B x H x N x d

        Returns:
            Tensor B x N x d x w, the head-mean hidden state per step

        Raises:
            DimensionError: If the head counts differ
        """
        b, n, d, steps = encoded.shape()
        heads = self._arch.heads()
        if graphs.heads() != heads:
            raise DimensionError(
                "Graph and unit head counts differ",
                {"graphs": graphs.heads(), "unit": heads}
            )
        supports = self.supports(graphs.adjacency())
        spread = Tensor(np.zeros((1, heads, 1, 1), dtype=self._dtype))
        state = hidden if hidden is not None else Tensor(
            np.zeros((b, heads, n, d), dtype=self._dtype)
        )
        outputs = []
        for t in range(steps):
            x = encoded[:, :, :, t].reshape(b, 1, n, d) + spread
            gates = ops.sigmoid(self._convolve(
                ops.concat([x, state], axis=-1), supports, self._gate, self._gate_bias
            ))
            reset = gates[..., :d]
            update = gates[..., d:]
            candidate = ops.tanh(self._convolve(
                ops.concat([x, reset * state], axis=-1),
                supports, self._candidate, self._candidate_bias
            ))
            state = update * state + (1.0 - update) * candidate
            outputs.append(state.mean(axis=1))
        return ops.stack(outputs, axis=-1)
