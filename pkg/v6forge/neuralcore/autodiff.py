"""Gradients of scalar losses with respect to named arrays."""

from typing import Callable, Dict, Tuple

import numpy as np

from ..exceptions import UnsupportedComposition
from .tensor import Tensor

Point = Dict[str, np.ndarray]
LossFn = Callable[[Dict[str, Tensor]], Tensor]


def value_and_grad(loss_fn: LossFn, at: Point) -> Tuple[float, Point]:
    """Evaluate a loss and its reverse-mode gradient at a point.

    Args:
        loss_fn: Builds the loss from tensors named like ``at``. It must use
            only the primitives of this package.
        at: Parameter and input values by name.

    Returns:
        The loss value and one gradient per name, each shaped like its
        value. Names the loss never touches get zeros.

    Raises:
        UnsupportedComposition: If loss_fn does not return a scalar Tensor.
    """
    leaves = {name: Tensor(value, requires_grad=True) for name, value in at.items()}
    result = loss_fn(leaves)
    if not isinstance(result, Tensor):
        raise UnsupportedComposition(
            f"loss must be built from kernel primitives, got {type(result).__name__}"
        )
    result.backward()

    grads = {}
    for name, leaf in leaves.items():
        grads[name] = leaf.grad if leaf.grad is not None else np.zeros_like(leaf.data)
    return float(result.data), grads


def grad(loss_fn: LossFn, at: Point) -> Point:
    """Gradient of loss_fn at a point; see value_and_grad."""
    return value_and_grad(loss_fn, at)[1]
