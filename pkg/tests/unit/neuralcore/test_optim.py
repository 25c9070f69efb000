"""Unit tests for the Adam optimizer step."""

import numpy as np
import pytest

from v6forge.exceptions import ShapeMismatch
from v6forge.neuralcore import init_optimizer, optimizer_step


@pytest.fixture
def params():
    return {"w": np.array([[1.0, -1.0], [0.5, 2.0]]), "b": np.zeros(2)}


class TestOptimizerStep:
    """Tests for optimizer_step."""

    def test_zero_gradient_leaves_params(self, params):
        state = init_optimizer(params)
        zero = {name: np.zeros_like(value) for name, value in params.items()}
        new_params, new_state = optimizer_step(state, params, zero)
        for name in params:
            np.testing.assert_array_equal(new_params[name], params[name])
        assert new_state.step == 1

    def test_constant_gradient_moves_by_learning_rate(self, params):
        """With bias correction each step is almost exactly lr in the gradient's direction."""
        state = init_optimizer(params, learning_rate=0.01)
        grads = {"w": np.full((2, 2), 3.0), "b": np.full(2, -0.5)}
        current = params
        for _ in range(5):
            current, state = optimizer_step(state, current, grads)
        np.testing.assert_allclose(current["w"], params["w"] - 0.05, rtol=1e-5)
        np.testing.assert_allclose(current["b"], params["b"] + 0.05, rtol=1e-5)

    def test_inputs_not_modified(self, params):
        before = {name: value.copy() for name, value in params.items()}
        state = init_optimizer(params)
        optimizer_step(state, params, {name: np.ones_like(v) for name, v in params.items()})
        for name in params:
            np.testing.assert_array_equal(params[name], before[name])
        assert state.step == 0

    def test_deterministic(self, params):
        grads = {"w": np.array([[0.1, 0.2], [0.3, 0.4]]), "b": np.array([1.0, -1.0])}
        first = optimizer_step(init_optimizer(params), params, grads)[0]
        second = optimizer_step(init_optimizer(params), params, grads)[0]
        for name in params:
            np.testing.assert_array_equal(first[name], second[name])

    def test_missing_gradient(self, params):
        with pytest.raises(ShapeMismatch):
            optimizer_step(init_optimizer(params), params, {"w": np.zeros((2, 2))})

    def test_wrong_gradient_shape(self, params):
        grads = {"w": np.zeros((2, 3)), "b": np.zeros(2)}
        with pytest.raises(ShapeMismatch):
            optimizer_step(init_optimizer(params), params, grads)
