# -*- coding: utf-8 -*-
"""
Learned graph domain objects.

SparseGraphSet holds the per-head channel graphs of the short-term path;
AffinityGraph holds the temporal window graph of the long-term path.

Example:
    >>> graphs.heads()
    3
    >>> graphs.edges(0, 0)[:1]
    [(0, 1, 0.42, 1)]
"""
import numpy as np


class SparseGraphSet:
    """
    Per-sample, per-head edge probabilities and sampled adjacencies.

    Tensors are batched: probabilities and adjacency are B x H x N x N,
    the raw two-category samples are B x H x N x N x 2. Diagonals are 0.

    Example:
        >>> graphs.adjacency().shape()
        (1, 3, 5, 5)
    """

    def __init__(self, probabilities, adjacency, samples):
        """
        Create a SparseGraphSet.

        Args:
            probabilities: Tensor of masked edge probabilities
            adjacency: Tensor of binary (or relaxed) adjacencies
            samples: Tensor of two-category samples E
        """
        self._probabilities = probabilities
        self._adjacency = adjacency
        self._samples = samples

    def probabilities(self):
        return self._probabilities

    def adjacency(self):
        return self._adjacency

    def samples(self):
        return self._samples

    def heads(self):
        return self._adjacency.shape()[1]

    def edges(self, sample, head):
        """
        List the off-diagonal edges of one head.

        Args:
            sample: Batch index
            head: Head index

        Returns:
            List of (source, target, probability, sampled) tuples
        """
        probs = self._probabilities.values()[sample, head]
        adjacency = self._adjacency.values()[sample, head]
        size = probs.shape[0]
        return [
            (i, j, float(probs[i, j]), int(round(float(adjacency[i, j]))))
            for i in range(size)
            for j in range(size)
            if i != j
        ]

    def __repr__(self):
        return "SparseGraphSet(shape=%s)" % (self._adjacency.shape(),)


class AffinityGraph:
    """
    Temporal affinity over pooled history windows.

    ``weights`` is the B x T x T graph after masked softmax and decay,
    ``raw`` the same graph before decay and ``decay`` the T x T matrix
    with entries delta ** |i - j|.

    Example:
        >>> graph.decay()[0, 2]
        0.49
    """

    def __init__(self, weights, raw, decay):
        """
        Create an AffinityGraph.

        Args:
            weights: Tensor B x T x T after decay
            raw: Tensor B x T x T before decay
            decay: ndarray T x T
        """
        self._weights = weights
        self._raw = raw
        self._decay = np.asarray(decay)

    def weights(self):
        return self._weights

    def raw(self):
        return self._raw

    def decay(self):
        return self._decay

    def windows(self):
        return self._decay.shape[0]

    def __repr__(self):
        return "AffinityGraph(T=%d)" % self.windows()
