"""Model dimensions and the named parameter arrays of the gated-conv VAE."""

from dataclasses import dataclass
from typing import Dict, Iterator, List, Tuple

import numpy as np

from ..addr6 import NYBBLES, SYMBOLS
from ..exceptions import ShapeMismatch
from ..neuralcore import GatedConvParams, glorot_uniform
from ..neuralcore.layers import KERNEL_WIDTH


@dataclass(frozen=True)
class VaeShape:
    """Dimensions of one model."""

    positions: int = NYBBLES
    """Sequence length (nybbles per address)."""

    alphabet: int = SYMBOLS
    """One-hot width of each position."""

    channels: int = 16
    """Width of every gated convolution output."""

    latent: int = 16
    """Dimensionality of z."""

    def __post_init__(self):
        for name in ("positions", "alphabet", "channels", "latent"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")

    def layout(self) -> List[Tuple[str, Tuple[int, ...]]]:
        """Parameter names and shapes, in storage order."""
        p, a, c, l = self.positions, self.alphabet, self.channels, self.latent
        k = KERNEL_WIDTH
        return [
            ("enc_conv1_w", (k * a, 2 * c)),
            ("enc_conv1_b", (2 * c,)),
            ("enc_conv2_w", (k * c, 2 * c)),
            ("enc_conv2_b", (2 * c,)),
            ("mu_w", (c, l)),
            ("mu_b", (l,)),
            ("logvar_w", (c, l)),
            ("logvar_b", (l,)),
            ("dec_dense_w", (l, p * c)),
            ("dec_dense_b", (p * c,)),
            ("dec_conv_w", (k * c, 2 * c)),
            ("dec_conv_b", (2 * c,)),
            ("out_w", (c, a)),
            ("out_b", (a,)),
        ]

    @property
    def parameter_count(self) -> int:
        return sum(int(np.prod(shape)) for _, shape in self.layout())


class VaeParams:
    """Every trainable array of the model, keyed by name.

    Encoder: two gated convolutions and the mu / log-variance heads.
    Decoder: a dense projection to positions x channels, one gated
    convolution and a per-position dense layer feeding a softmax.
    """

    def __init__(self, shape: VaeShape, arrays: Dict[str, np.ndarray]):
        expected = dict(shape.layout())
        if set(arrays) != set(expected):
            raise ShapeMismatch(f"parameter names differ: {sorted(set(arrays) ^ set(expected))}")
        for name, dims in expected.items():
            if arrays[name].shape != dims:
                raise ShapeMismatch(f"parameter {name!r} has the wrong shape", dims, arrays[name].shape)
        self.shape = shape
        self.arrays = {name: arrays[name] for name, _ in shape.layout()}

    @classmethod
    def init(cls, shape: VaeShape = VaeShape(), rng_seed: int = 0, dtype=np.float32) -> "VaeParams":
        """Seeded Glorot-uniform weights and zero biases."""
        rng = np.random.default_rng(rng_seed)
        arrays = {}
        for name, dims in shape.layout():
            if name.endswith("_b"):
                arrays[name] = np.zeros(dims, dtype=dtype)
            else:
                fan_in, fan_out = dims
                arrays[name] = glorot_uniform(rng, dims, fan_in, fan_out, dtype)
        return cls(shape, arrays)

    @classmethod
    def zeros(cls, shape: VaeShape = VaeShape(), dtype=np.float32) -> "VaeParams":
        return cls(shape, {name: np.zeros(dims, dtype=dtype) for name, dims in shape.layout()})

    def with_arrays(self, arrays: Dict[str, np.ndarray]) -> "VaeParams":
        return VaeParams(self.shape, arrays)

    def astype(self, dtype) -> "VaeParams":
        return VaeParams(self.shape, {k: v.astype(dtype) for k, v in self.arrays.items()})

    def gated(self, prefix: str) -> GatedConvParams:
        """One of 'enc_conv1', 'enc_conv2', 'dec_conv'."""
        return GatedConvParams(self.arrays[f"{prefix}_w"], self.arrays[f"{prefix}_b"])

    def items(self) -> Iterator[Tuple[str, np.ndarray]]:
        return iter(self.arrays.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VaeParams):
            return NotImplemented
        return self.shape == other.shape and all(
            self.arrays[k].dtype == other.arrays[k].dtype
            and np.array_equal(self.arrays[k], other.arrays[k])
            for k in self.arrays
        )

    def __repr__(self) -> str:
        return f"VaeParams({self.shape}, {self.shape.parameter_count} values)"
