"""Encoder, reparameterization, decoder and loss of the gated-conv VAE.

The *_graph functions build differentiable graphs over named tensors
for training; encode/decode/loss are the plain array entry points.
"""

from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np

from ..exceptions import ShapeMismatch
from ..neuralcore import (
    Tensor,
    add,
    as_tensor,
    binary_cross_entropy,
    categorical_cross_entropy,
    dense,
    exp,
    gated_conv,
    kl_divergence,
    mean,
    mul,
    reshape,
    scale,
    softmax,
)
from .params import VaeParams, VaeShape

LOSS_KINDS = ("bce", "categorical")

Named = Dict[str, Tensor]


@dataclass(frozen=True)
class LossBreakdown:
    """Reconstruction and KL terms of the objective."""

    j_xent: float
    j_kl: float

    @property
    def j_vae(self) -> float:
        return self.j_xent + self.j_kl

    def __str__(self) -> str:
        return f"j_xent={self.j_xent:.6f} j_kl={self.j_kl:.6f} j_vae={self.j_vae:.6f}"


def encoder_graph(t: Named, grids: Tensor) -> Tuple[Tensor, Tensor]:
    h1 = gated_conv(grids, t["enc_conv1_w"], t["enc_conv1_b"])
    h2 = add(gated_conv(h1, t["enc_conv2_w"], t["enc_conv2_b"]), h1)
    pooled = mean(h2, axis=1)
    return dense(pooled, t["mu_w"], t["mu_b"]), dense(pooled, t["logvar_w"], t["logvar_b"])


def reparameterize_graph(mu: Tensor, log_var: Tensor, eps: Tensor) -> Tensor:
    return add(mu, mul(eps, exp(scale(log_var, 0.5))))


def decoder_graph(t: Named, z: Tensor, shape: VaeShape) -> Tensor:
    projected = dense(z, t["dec_dense_w"], t["dec_dense_b"])
    grid = reshape(projected, (z.shape[0], shape.positions, shape.channels))
    hidden = gated_conv(grid, t["dec_conv_w"], t["dec_conv_b"])
    return softmax(dense(hidden, t["out_w"], t["out_b"]), axis=-1)


def reconstruction_graph(y: Tensor, x: Tensor, kind: str = "bce") -> Tensor:
    if kind == "bce":
        return binary_cross_entropy(y, x)
    if kind == "categorical":
        return categorical_cross_entropy(y, x)
    raise ValueError(f"Unknown loss {kind!r}; expected one of {', '.join(LOSS_KINDS)}")


def objective_graph(
    t: Named, x: np.ndarray, eps: np.ndarray, shape: VaeShape, kind: str = "bce"
) -> Tuple[Tensor, Tensor, Tensor]:
    """(j_vae, j_xent, j_kl) for a batch x with fixed noise eps."""
    x_t = as_tensor(x)
    mu, log_var = encoder_graph(t, x_t)
    z = reparameterize_graph(mu, log_var, as_tensor(eps))
    y = decoder_graph(t, z, shape)
    xent = reconstruction_graph(y, x_t, kind)
    kl = kl_divergence(mu, log_var)
    return add(xent, kl), xent, kl


def _constants(p: VaeParams) -> Named:
    return {name: Tensor(value) for name, value in p.items()}


def encode(p: VaeParams, grids: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """mu and log-variance for one (positions, alphabet) grid or a batch of them.

    Raises:
        ShapeMismatch: If the grid does not fit the model.
    """
    grids = np.asarray(grids)
    single = grids.ndim == 2
    batch = grids[np.newaxis] if single else grids
    expected = (p.shape.positions, p.shape.alphabet)
    if batch.ndim != 3 or batch.shape[1:] != expected:
        raise ShapeMismatch("grid does not match the model", expected, grids.shape)
    batch = batch.astype(p.arrays["mu_w"].dtype, copy=False)
    mu, log_var = encoder_graph(_constants(p), Tensor(batch))
    if single:
        return mu.data[0], log_var.data[0]
    return mu.data, log_var.data


def reparameterize(mu: np.ndarray, log_var: np.ndarray, eps: np.ndarray) -> np.ndarray:
    """z = mu + eps * exp(log_var / 2)."""
    return mu + eps * np.exp(0.5 * log_var)


def decode(p: VaeParams, z: np.ndarray) -> np.ndarray:
    """Row-stochastic (positions, alphabet) grid for each latent vector.

    Raises:
        ShapeMismatch: If z is not latent-dimensional.
    """
    z = np.asarray(z)
    single = z.ndim == 1
    batch = z[np.newaxis] if single else z
    if batch.ndim != 2 or batch.shape[1] != p.shape.latent:
        raise ShapeMismatch("latent vector has the wrong size", (p.shape.latent,), z.shape)
    batch = batch.astype(p.arrays["dec_dense_w"].dtype, copy=False)
    y = decoder_graph(_constants(p), Tensor(batch), p.shape).data
    return y[0] if single else y


def loss(
    x: np.ndarray, y: np.ndarray, mu: np.ndarray, log_var: np.ndarray, kind: str = "bce"
) -> LossBreakdown:
    """Objective terms for one example or a batch (batch means).

    Raises:
        DomainError: If y holds values that are not probabilities.
        ShapeMismatch: If x and y differ in shape.
    """
    x, y = np.asarray(x), np.asarray(y)
    mu, log_var = np.asarray(mu), np.asarray(log_var)
    if x.ndim == 2:
        x, y = x[np.newaxis], y[np.newaxis]
    if mu.ndim == 1:
        mu, log_var = mu[np.newaxis], log_var[np.newaxis]
    xent = reconstruction_graph(Tensor(y), Tensor(x), kind)
    kl = kl_divergence(Tensor(mu), Tensor(log_var))
    return LossBreakdown(j_xent=float(xent.data), j_kl=float(kl.data))
