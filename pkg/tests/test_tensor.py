# -*- coding: utf-8 -*-
"""
Tests for Tensor and GradientTape.
"""
import logging
import threading
import unittest

import numpy as np

from darts_mtsad.result.errors import ContractError
from darts_mtsad.tensor.tape import GradientTape, active_tape
from darts_mtsad.tensor.tensor import Tensor

logging.disable(logging.CRITICAL)


class TestTensor(unittest.TestCase):
    """Tests for Tensor leaves and results."""

    def test_tensor_converts_integers_to_float(self):
        self.assertEqual(
            Tensor([1, 2, 3]).dtype(), np.float64,
            "Tensor should store integer input as float64"
        )

    def test_tensor_keeps_requested_precision(self):
        self.assertEqual(
            Tensor(np.zeros(3), dtype=np.float32).dtype(), np.float32,
            "Tensor should keep the requested dtype"
        )

    def test_operation_result_is_not_leaf(self):
        a = Tensor(np.ones(2), requires_grad=True)
        self.assertFalse((a + 1.0).is_leaf(), "Operation results should not be leaves")

    def test_grad_defaults_to_zeros(self):
        a = Tensor(np.ones((2, 3)), requires_grad=True)
        self.assertTrue(np.array_equal(a.grad(), np.zeros((2, 3))), "Fresh grad should be zeros")

    def test_scale_grad_multiplies_accumulated_gradient(self):
        a = Tensor(np.ones(2), requires_grad=True)
        a.accumulate(np.array([2.0, 4.0]))
        a.scale_grad(0.5)
        self.assertTrue(np.allclose(a.grad(), [1.0, 2.0]), "scale_grad should rescale the gradient")

    def test_detach_drops_gradient_requirement(self):
        a = Tensor(np.ones(2), requires_grad=True)
        self.assertFalse(a.detach().requires_grad(), "detach should not require gradients")


class TestGradientTape(unittest.TestCase):
    """Tests for GradientTape."""

    def test_backward_of_product(self):
        rng = np.random.default_rng(4)
        x = Tensor(rng.standard_normal((3, 4)), requires_grad=True)
        w = Tensor(rng.standard_normal((4, 2)), requires_grad=True)
        with GradientTape() as tape:
            loss = (x @ w).sum()
        grads = tape.backward(loss)
        self.assertTrue(
            np.allclose(grads.of(x), np.ones((3, 2)) @ w.values().T),
            "Gradient of sum(x @ w) by x should be ones @ w^T"
        )

    def test_backward_accumulates_shared_input(self):
        x = Tensor(np.array([3.0]), requires_grad=True)
        with GradientTape() as tape:
            loss = (x * x + x).sum()
        self.assertTrue(
            np.allclose(tape.backward(loss).of(x), [7.0]),
            "Gradient should sum contributions of every use"
        )

    def test_backward_rejects_non_scalar(self):
        x = Tensor(np.ones(3), requires_grad=True)
        with GradientTape() as tape:
            y = x * 2.0
        with self.assertRaises(ContractError, msg="backward should need a scalar loss"):
            tape.backward(y)

    def test_unreached_leaf_answers_zeros(self):
        x = Tensor(np.ones(2), requires_grad=True)
        unused = Tensor(np.ones((2, 2)), requires_grad=True)
        with GradientTape() as tape:
            loss = (x * 2.0).sum()
        grads = tape.backward(loss)
        self.assertTrue(
            np.array_equal(grads.of(unused), np.zeros((2, 2))) and not grads.reached(unused),
            "Unreached leaves should answer zeros"
        )

    def test_tape_is_cleared_after_backward(self):
        x = Tensor(np.ones(2), requires_grad=True)
        with GradientTape() as tape:
            loss = (x * x).sum()
        tape.backward(loss)
        self.assertEqual(tape.size(), 0, "Tape should be empty after backward")

    def test_no_recording_outside_tape(self):
        self.assertFalse(active_tape().is_present(), "No tape should be active outside a block")

    def test_tapes_are_thread_local(self):
        seen = []

        def look():
            seen.append(active_tape().is_present())

        with GradientTape():
            thread = threading.Thread(target=look)
            thread.start()
            thread.join()
        self.assertEqual(seen, [False], "Another thread should not see this thread's tape")


if __name__ == "__main__":
    unittest.main()
