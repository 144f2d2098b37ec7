# -*- coding: utf-8 -*-
"""
Tests for the short-term graph path.
"""
import logging
import unittest

import numpy as np

from darts_mtsad.domain.graph import SparseGraphSet
from darts_mtsad.model.architecture import Architecture
from darts_mtsad.model.sarm import DiffusionUnit, GraphLearner, WindowEncoder
from darts_mtsad.model.state import ParameterSet
from darts_mtsad.result.errors import DimensionError
from darts_mtsad.tensor.tape import GradientTape
from darts_mtsad.tensor.tensor import Tensor

logging.disable(logging.CRITICAL)


def _built(**changes):
    fields = dict(channels=5, window=6, history=24, latent=8, heads=2, head_dim=4,
                  priors=(0.9, 0.05), precision="float64")
    fields.update(changes)
    arch = Architecture(**fields)
    rng = np.random.default_rng(0)
    params = ParameterSet(arch.dtype())
    encoder = WindowEncoder(params, arch, rng)
    learner = GraphLearner(params, arch, rng)
    unit = DiffusionUnit(params, arch, rng)
    window = Tensor(np.random.default_rng(1).standard_normal((3, 5, 6)))
    return arch, params, encoder, learner, unit, encoder.forward(window)


def _parts(**changes):
    arch, _, encoder, learner, unit, encoded = _built(**changes)
    return arch, encoder, learner, unit, encoded


def _graphs(adjacency):
    return SparseGraphSet(
        Tensor(np.zeros_like(adjacency)), Tensor(adjacency),
        Tensor(np.zeros(adjacency.shape + (2,)))
    )


class TestWindowEncoder(unittest.TestCase):
    """Tests for WindowEncoder."""

    def test_window_encoder_lifts_to_latent(self):
        _, _, _, _, encoded = _parts()
        self.assertEqual(encoded.shape(), (3, 5, 8, 6), "Encoding should be B x N x d x w")

    def test_window_encoder_rejects_wrong_channel_count(self):
        _, encoder, _, _, _ = _parts()
        with self.assertRaises(DimensionError, msg="Four channels should be rejected"):
            encoder.forward(Tensor(np.zeros((1, 4, 6))))


class TestGraphLearner(unittest.TestCase):
    """Tests for GraphLearner."""

    def test_graph_learner_probabilities_have_zero_diagonal(self):
        _, _, learner, _, encoded = _parts()
        probs = learner.probabilities(encoded).values()
        diagonals = np.diagonal(probs, axis1=-2, axis2=-1)
        self.assertEqual(probs.shape, (3, 2, 5, 5), "Probabilities should be B x H x N x N")
        self.assertTrue(np.all(diagonals == 0.0), "Self-loop probabilities should be 0")

    def test_graph_learner_evaluation_adjacency_is_binary(self):
        _, _, learner, _, encoded = _parts()
        graphs = learner.forward(encoded, np.random.default_rng(2), False)
        adjacency = graphs.adjacency().values()
        self.assertTrue(
            set(np.unique(adjacency)) <= {0.0, 1.0}
            and np.all(np.diagonal(adjacency, axis1=-2, axis2=-1) == 0.0),
            "Evaluation adjacency should be binary with a zero diagonal"
        )

    def test_graph_learner_evaluation_follows_probabilities(self):
        _, _, learner, _, encoded = _parts()
        graphs = learner.forward(encoded, np.random.default_rng(2), False)
        probs = graphs.probabilities().values()
        mask = ~np.eye(5, dtype=bool)
        self.assertTrue(
            np.array_equal(graphs.adjacency().values()[..., mask] > 0.5, probs[..., mask] > 0.5),
            "Evaluation edges should be the probabilities above one half"
        )

    def test_graph_learner_hard_training_samples_are_binary(self):
        _, _, learner, _, encoded = _parts(hard_sampling=True)
        adjacency = learner.forward(encoded, np.random.default_rng(3), True).adjacency().values()
        self.assertTrue(set(np.unique(adjacency)) <= {0.0, 1.0}, "Hard samples should be binary")

    def test_graph_learner_keeps_near_certain_edge(self):
        _, _, learner, _, _ = _parts(hard_sampling=True)
        probs = np.full((1000, 2, 5, 5), 0.5) * ~np.eye(5, dtype=bool)
        probs[:, 0, 0, 1] = 1.0 - 1e-12
        learner.probabilities = lambda encoded: Tensor(probs)
        adjacency = learner.forward(None, np.random.default_rng(4), True).adjacency().values()
        self.assertGreaterEqual(
            adjacency[:, 0, 0, 1].mean(), 0.99,
            "An edge scored near 1 should be sampled in at least 99% of draws"
        )

    def test_graph_learner_scorer_receives_gradients(self):
        _, params, _, learner, unit, encoded = _built(hard_sampling=True)
        with GradientTape() as tape:
            hidden = unit.forward(encoded, learner.forward(encoded, np.random.default_rng(5), True))
            loss = (hidden * hidden).sum()
        tape.backward(loss)
        for name in ("sarm.graph.query", "sarm.graph.key"):
            self.assertTrue(
                np.any(params.get(name).grad() != 0.0),
                "Straight-through samples should pass gradients to %s" % name
            )

    def test_graph_learner_soft_training_samples_lie_in_unit_interval(self):
        _, _, learner, _, encoded = _parts(hard_sampling=False)
        adjacency = learner.forward(encoded, np.random.default_rng(3), True).adjacency().values()
        self.assertTrue(
            np.all((adjacency >= 0.0) & (adjacency <= 1.0)),
            "Soft samples should lie in [0, 1]"
        )

    def test_graph_set_edges_skip_self_loops(self):
        _, _, learner, _, encoded = _parts()
        edges = learner.forward(encoded, np.random.default_rng(2), False).edges(0, 1)
        self.assertEqual(len(edges), 20, "Five channels have twenty ordered pairs")
        self.assertTrue(all(i != j for i, j, _, _ in edges), "No edge should be a self-loop")


class TestDiffusionUnit(unittest.TestCase):
    """Tests for DiffusionUnit."""

    def test_diffusion_unit_output_shape(self):
        _, _, learner, unit, encoded = _parts()
        graphs = learner.forward(encoded, np.random.default_rng(0), True)
        self.assertEqual(unit.forward(encoded, graphs).shape(), (3, 5, 8, 6), "Output should be B x N x d x w")

    def test_diffusion_supports_are_row_stochastic(self):
        _, _, _, unit, _ = _parts()
        adjacency = np.ones((1, 2, 5, 5)) - np.eye(5)
        walk = unit.supports(Tensor(adjacency))[0].values()
        self.assertTrue(np.allclose(walk.sum(axis=-1), 1.0), "Walk rows should sum to 1")

    def test_diffusion_isolated_rows_become_identity(self):
        _, _, _, unit, _ = _parts(isolated_rows="identity")
        walk = unit.supports(Tensor(np.zeros((1, 2, 5, 5))))[0].values()
        self.assertTrue(np.array_equal(walk[0, 0], np.eye(5)), "Isolated rows should keep their own state")

    def test_diffusion_isolated_rows_can_be_zero(self):
        _, _, _, unit, _ = _parts(isolated_rows="zero")
        walk = unit.supports(Tensor(np.zeros((1, 2, 5, 5))))[0].values()
        self.assertFalse(walk.any(), "Zero mode should drop isolated rows")

    def test_diffusion_bidirectional_adds_reverse_walk(self):
        _, _, _, unit, _ = _parts(bidirectional=True)
        adjacency = np.zeros((1, 2, 5, 5))
        adjacency[..., 0, 1] = 1.0
        forward, reverse = unit.supports(Tensor(adjacency))
        self.assertEqual(
            (forward.values()[0, 0, 0, 1], reverse.values()[0, 0, 1, 0]), (1.0, 1.0),
            "The reverse walk should follow transposed edges"
        )

    def test_diffusion_output_ignores_head_order(self):
        _, params, _, learner, unit, encoded = _built(heads=3, priors=(0.9, 0.05, 0.05))
        before = learner.forward(encoded, np.random.default_rng(0), False)
        first = unit.forward(encoded, before).values()
        order = [2, 0, 1]
        for name, tensor in params.items():
            if name.startswith(("sarm.graph.", "sarm.diffusion.")):
                tensor.assign(tensor.values()[order])
        after = learner.forward(encoded, np.random.default_rng(0), False)
        self.assertTrue(
            np.array_equal(after.adjacency().values(), before.adjacency().values()[:, order]),
            "Permuted scorers should permute the graphs"
        )
        self.assertTrue(
            np.allclose(unit.forward(encoded, after).values(), first, rtol=0.0, atol=1e-9),
            "The head mean should not depend on head order"
        )

    def test_diffusion_empty_graph_matches_order_zero(self):
        _, params, _, _, unit, encoded = _built(isolated_rows="zero")
        _, local, _, _, direct, _ = _built(isolated_rows="zero", diffusion_steps=0)
        for name, tensor in local.items():
            if name.startswith("sarm.diffusion."):
                source = params.get(name).values()
                tensor.assign(source[:, :16] if name.endswith(".weight") else source)
        empty = _graphs(np.zeros((3, 2, 5, 5)))
        self.assertTrue(
            np.allclose(unit.forward(encoded, empty).values(),
                        direct.forward(encoded, empty).values(), rtol=0.0, atol=1e-12),
            "Higher diffusion orders should vanish on an empty graph"
        )

    def test_diffusion_empty_graph_with_identity_rows_sums_orders(self):
        _, params, _, _, unit, encoded = _built()
        _, local, _, _, direct, _ = _built(diffusion_steps=0)
        for name, tensor in local.items():
            if name.startswith("sarm.diffusion."):
                source = params.get(name).values()
                if name.endswith(".weight"):
                    source = source.reshape(2, 3, 16, -1).sum(axis=1)
                tensor.assign(source)
        empty = _graphs(np.zeros((3, 2, 5, 5)))
        self.assertTrue(
            np.allclose(unit.forward(encoded, empty).values(),
                        direct.forward(encoded, empty).values(), rtol=0.0, atol=1e-12),
            "Identity hops should add the order blocks of one input"
        )


if __name__ == "__main__":
    unittest.main()
