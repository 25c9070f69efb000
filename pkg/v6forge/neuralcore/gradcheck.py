"""Central finite-difference verification of analytic gradients."""

from typing import Dict, Optional

import numpy as np
from loguru import logger

from .autodiff import LossFn, Point, grad
from .tensor import Tensor

DEFAULT_STEP = 1e-4
ABSOLUTE_FLOOR = 1e-6


def _evaluate(loss_fn: LossFn, at: Point) -> float:
    return float(loss_fn({name: Tensor(value) for name, value in at.items()}).data)


def numeric_grad(loss_fn: LossFn, at: Point, step: float = DEFAULT_STEP) -> Point:
    """(f(x + h) - f(x - h)) / 2h for every coordinate, at 64-bit precision."""
    if step <= 0:
        raise ValueError(f"step must be positive, got {step}")

    point = {name: np.array(value, dtype=np.float64) for name, value in at.items()}
    estimates = {}
    for name, value in point.items():
        estimate = np.zeros_like(value)
        flat, out = value.reshape(-1), estimate.reshape(-1)
        for i in range(flat.size):
            original = flat[i]
            flat[i] = original + step
            upper = _evaluate(loss_fn, point)
            flat[i] = original - step
            lower = _evaluate(loss_fn, point)
            flat[i] = original
            out[i] = (upper - lower) / (2 * step)
        estimates[name] = estimate
    return estimates


def finite_diff_check(
    loss_fn: LossFn,
    at: Point,
    step: float = DEFAULT_STEP,
    floor: float = ABSOLUTE_FLOOR,
    analytic: Optional[Dict[str, np.ndarray]] = None,
) -> float:
    """Worst coordinate-wise relative error between analytic and numeric gradients.

    The relative error of one coordinate is |a - n| / max(|a|, |n|, floor).

    Args:
        loss_fn: Loss built from kernel primitives.
        at: Point to probe; promoted to float64.
        step: Central-difference step.
        floor: Absolute floor in the denominator.
        analytic: Gradients to verify. Computed with grad() when omitted;
            pass a perturbed copy to test the harness itself.

    Returns:
        The maximum relative error over all coordinates (0.0 for an empty point).
    """
    point = {name: np.array(value, dtype=np.float64) for name, value in at.items()}
    if analytic is None:
        analytic = grad(loss_fn, point)
    numeric = numeric_grad(loss_fn, point, step)

    worst = 0.0
    for name in point:
        a = np.asarray(analytic[name], dtype=np.float64)
        n = numeric[name]
        denominator = np.maximum(np.maximum(np.abs(a), np.abs(n)), floor)
        errors = np.abs(a - n) / denominator
        if errors.size:
            err = float(errors.max())
            logger.debug(f"gradcheck {name}: max relative error {err:.3e}")
            worst = max(worst, err)
    return worst
