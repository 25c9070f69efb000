"""Minimal differentiable kernel: tensors, gated convolutions, losses and Adam."""

from .autodiff import grad, value_and_grad
from .gradcheck import finite_diff_check, numeric_grad
from .layers import GatedConvParams, dense, gated_conv, gated_conv_forward, glorot_uniform
from .losses import LOG_EPSILON, binary_cross_entropy, categorical_cross_entropy, kl_divergence
from .optim import OptimizerState, init_optimizer, optimizer_step
from .tensor import (
    Tensor,
    add,
    as_tensor,
    conv1d_same,
    exp,
    matmul,
    mean,
    mul,
    reshape,
    scale,
    sigmoid,
    softmax,
    split_last,
    total,
)

__all__ = [
    "LOG_EPSILON",
    "GatedConvParams",
    "OptimizerState",
    "Tensor",
    "add",
    "as_tensor",
    "binary_cross_entropy",
    "categorical_cross_entropy",
    "conv1d_same",
    "dense",
    "exp",
    "finite_diff_check",
    "gated_conv",
    "gated_conv_forward",
    "glorot_uniform",
    "grad",
    "init_optimizer",
    "kl_divergence",
    "matmul",
    "mean",
    "mul",
    "numeric_grad",
    "optimizer_step",
    "reshape",
    "scale",
    "sigmoid",
    "softmax",
    "split_last",
    "total",
    "value_and_grad",
]
