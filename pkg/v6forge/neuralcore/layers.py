"""Dense and gated convolutional layers built from kernel primitives."""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..exceptions import ShapeMismatch
from .tensor import Tensor, add, as_tensor, conv1d_same, matmul, mul, sigmoid, split_last

KERNEL_WIDTH = 3


def glorot_uniform(
    rng: np.random.Generator,
    shape: Tuple[int, ...],
    fan_in: int,
    fan_out: int,
    dtype=np.float32,
) -> np.ndarray:
    """Uniform in +-sqrt(6 / (fan_in + fan_out))."""
    limit = np.sqrt(6.0 / (fan_in + fan_out))
    return rng.uniform(-limit, limit, size=shape).astype(dtype)


@dataclass
class GatedConvParams:
    """Kernel and bias of one gated convolution layer.

    The convolution has 2 * channels outputs; the first half is the
    value A and the second half the gate B.
    """

    weight: np.ndarray
    """(3 * in_channels, 2 * channels) kernel."""

    bias: np.ndarray
    """(2 * channels,) per-output-channel bias."""

    @property
    def in_channels(self) -> int:
        return self.weight.shape[0] // KERNEL_WIDTH

    @property
    def channels(self) -> int:
        return self.weight.shape[1] // 2

    @classmethod
    def init(
        cls,
        rng: np.random.Generator,
        in_channels: int,
        channels: int,
        dtype=np.float32,
    ) -> "GatedConvParams":
        """Glorot-uniform kernel, zero bias."""
        fan_in = KERNEL_WIDTH * in_channels
        weight = glorot_uniform(rng, (fan_in, 2 * channels), fan_in, 2 * channels, dtype)
        return cls(weight=weight, bias=np.zeros(2 * channels, dtype=dtype))

    @classmethod
    def zeros(cls, in_channels: int, channels: int, dtype=np.float32) -> "GatedConvParams":
        return cls(
            weight=np.zeros((KERNEL_WIDTH * in_channels, 2 * channels), dtype=dtype),
            bias=np.zeros(2 * channels, dtype=dtype),
        )


def dense(x: Tensor, weight: Tensor, bias: Tensor) -> Tensor:
    """x @ weight + bias over the last axis."""
    return add(matmul(x, weight), bias)


def gated_conv(x: Tensor, weight: Tensor, bias: Tensor) -> Tensor:
    """H = A * sigmoid(B), with [A | B] the convolution output split in half."""
    conv = conv1d_same(x, weight, bias)
    channels = conv.shape[-1] // 2
    a, b = split_last(conv, channels)
    return mul(a, sigmoid(b))


def gated_conv_forward(p: GatedConvParams, grid: np.ndarray) -> np.ndarray:
    """Apply one gated convolution to a single (positions, channels) grid or a batch.

    Raises:
        ShapeMismatch: If the grid's channel count does not match the kernel.
    """
    single = grid.ndim == 2
    batch = grid[np.newaxis] if single else grid
    if batch.ndim != 3 or batch.shape[-1] != p.in_channels:
        raise ShapeMismatch(
            "grid channels do not match the kernel",
            (-1, p.in_channels),
            grid.shape,
        )
    out = gated_conv(as_tensor(batch), as_tensor(p.weight), as_tensor(p.bias)).data
    return out[0] if single else out
