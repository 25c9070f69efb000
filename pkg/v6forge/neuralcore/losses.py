"""Reconstruction and KL losses as differentiable primitives.

All losses sum over the entries of one example and average over the
batch (axis 0).
"""

import numpy as np

from ..exceptions import DomainError, ShapeMismatch
from .tensor import Tensor, as_tensor

LOG_EPSILON = 1e-7


def _check_probabilities(y: np.ndarray) -> None:
    if not np.all(np.isfinite(y)) or y.min() < 0 or y.max() > 1:
        raise DomainError("decoded values must be probabilities in [0, 1]")


def binary_cross_entropy(y: Tensor, x: Tensor, eps: float = LOG_EPSILON) -> Tensor:
    """-(x log y + (1 - x) log(1 - y)) summed per example, mean over the batch.

    y is clamped to [eps, 1 - eps]; the gradient is zero where clamping
    was active.

    Raises:
        DomainError: If y is not finite or lies outside [0, 1].
        ShapeMismatch: If x and y differ in shape.
    """
    y, x = as_tensor(y), as_tensor(x)
    if y.shape != x.shape:
        raise ShapeMismatch("target and prediction shapes differ", x.shape, y.shape)
    _check_probabilities(y.data)

    batch = y.shape[0]
    clamped = np.clip(y.data, eps, 1 - eps)
    active = (y.data >= eps) & (y.data <= 1 - eps)
    value = -(x.data * np.log(clamped) + (1 - x.data) * np.log(1 - clamped)).sum() / batch
    out = Tensor(np.asarray(value, dtype=y.dtype), _parents=(y, x), op="bce")

    def _backward():
        dy = -(x.data / clamped - (1 - x.data) / (1 - clamped)) * active / batch
        y.accumulate((out.grad * dy).astype(y.dtype))
        dx = -(np.log(clamped) - np.log(1 - clamped)) / batch
        x.accumulate((out.grad * dx).astype(x.dtype))

    out._backward = _backward
    return out


def categorical_cross_entropy(y: Tensor, x: Tensor, eps: float = LOG_EPSILON) -> Tensor:
    """-sum(x log y) per example, mean over the batch (per-row categorical loss)."""
    y, x = as_tensor(y), as_tensor(x)
    if y.shape != x.shape:
        raise ShapeMismatch("target and prediction shapes differ", x.shape, y.shape)
    _check_probabilities(y.data)

    batch = y.shape[0]
    clamped = np.clip(y.data, eps, 1.0)
    active = y.data >= eps
    value = -(x.data * np.log(clamped)).sum() / batch
    out = Tensor(np.asarray(value, dtype=y.dtype), _parents=(y, x), op="cce")

    def _backward():
        y.accumulate((out.grad * -(x.data / clamped) * active / batch).astype(y.dtype))
        x.accumulate((out.grad * -np.log(clamped) / batch).astype(x.dtype))

    out._backward = _backward
    return out


def kl_divergence(mu: Tensor, log_var: Tensor) -> Tensor:
    """-1/2 (1 + log s^2 - mu^2 - s^2) summed over latent dims, mean over the batch."""
    mu, log_var = as_tensor(mu), as_tensor(log_var)
    if mu.shape != log_var.shape:
        raise ShapeMismatch("mu and log_var shapes differ", mu.shape, log_var.shape)

    batch = mu.shape[0]
    var = np.exp(log_var.data)
    value = -0.5 * (1 + log_var.data - mu.data ** 2 - var).sum() / batch
    out = Tensor(np.asarray(value, dtype=mu.dtype), _parents=(mu, log_var), op="kl")

    def _backward():
        mu.accumulate((out.grad * mu.data / batch).astype(mu.dtype))
        log_var.accumulate((out.grad * 0.5 * (var - 1) / batch).astype(log_var.dtype))

    out._backward = _backward
    return out
