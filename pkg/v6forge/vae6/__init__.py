"""Gated convolutional variational autoencoder over nybble sequences."""

from .generator import SAMPLING_MODES, generate
from .model import LOSS_KINDS, LossBreakdown, decode, encode, loss, reparameterize
from .params import VaeParams, VaeShape
from .persist import FORMAT_VERSION, load_params, read_model_file, save_params, write_model_file
from .training import TrainConfig, format_history, train, train_step

__all__ = [
    "FORMAT_VERSION",
    "LOSS_KINDS",
    "SAMPLING_MODES",
    "LossBreakdown",
    "TrainConfig",
    "VaeParams",
    "VaeShape",
    "decode",
    "encode",
    "format_history",
    "generate",
    "load_params",
    "loss",
    "read_model_file",
    "reparameterize",
    "save_params",
    "train",
    "train_step",
    "write_model_file",
]
