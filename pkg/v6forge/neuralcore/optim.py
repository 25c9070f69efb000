"""Adaptive-moment (Adam) optimizer as a pure state transition."""

from dataclasses import dataclass, field, replace
from typing import Dict, Tuple

import numpy as np

from ..exceptions import ShapeMismatch

Params = Dict[str, np.ndarray]


@dataclass(frozen=True)
class OptimizerState:
    """Step count, moment estimates and hyperparameters."""

    learning_rate: float = 1e-3
    beta1: float = 0.9
    beta2: float = 0.999
    epsilon: float = 1e-8
    step: int = 0
    m: Params = field(default_factory=dict)
    """First-moment accumulators, one per parameter name."""
    v: Params = field(default_factory=dict)
    """Second-moment accumulators, one per parameter name."""


def init_optimizer(params: Params, learning_rate: float = 1e-3, **hyper) -> OptimizerState:
    """Fresh state with zero moments shaped like params."""
    return OptimizerState(
        learning_rate=learning_rate,
        m={name: np.zeros_like(value) for name, value in params.items()},
        v={name: np.zeros_like(value) for name, value in params.items()},
        **hyper,
    )


def optimizer_step(
    state: OptimizerState, params: Params, grads: Params
) -> Tuple[Params, OptimizerState]:
    """One bias-corrected Adam update.

    Inputs are not modified; new arrays are returned.

    Raises:
        ShapeMismatch: If a gradient or moment is shaped unlike its parameter,
            or a parameter has no gradient.
    """
    step = state.step + 1
    correction1 = 1 - state.beta1 ** step
    correction2 = 1 - state.beta2 ** step

    new_params, new_m, new_v = {}, {}, {}
    for name, value in params.items():
        if name not in grads:
            raise ShapeMismatch(f"no gradient for parameter {name!r}", value.shape, None)
        g = grads[name]
        m = state.m.get(name, np.zeros_like(value))
        v = state.v.get(name, np.zeros_like(value))
        if g.shape != value.shape or m.shape != value.shape or v.shape != value.shape:
            raise ShapeMismatch(f"shape disagreement for {name!r}", value.shape, g.shape)

        m = state.beta1 * m + (1 - state.beta1) * g
        v = state.beta2 * v + (1 - state.beta2) * g * g
        update = state.learning_rate * (m / correction1) / (np.sqrt(v / correction2) + state.epsilon)
        new_params[name] = (value - update).astype(value.dtype)
        new_m[name] = m.astype(value.dtype)
        new_v[name] = v.astype(value.dtype)

    return new_params, replace(state, step=step, m=new_m, v=new_v)
