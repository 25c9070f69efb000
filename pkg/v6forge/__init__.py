"""v6forge - IPv6 target generation with a gated convolutional VAE.

Seeds are classified (by addressing scheme or by clustering the entropy
fingerprints of their prefixes), a variational autoencoder is trained
per category, and candidates sampled from its latent prior are scored
against an activity oracle.

Example:
    from v6forge import get_classifier, load_seed_file
    from v6forge.vae6 import TrainConfig, generate, train

    seeds = load_seed_file("seeds.txt")
    partition = get_classifier("manual").classify(seeds)
    params, history = train(partition["fixed_iid"], TrainConfig(epochs=5))
    candidates = generate(params, n=10_000, rng_seed=1)
"""

from .addr6 import SeedSet, canonicalize, load_seed_file, parse_text, write_seed_file
from .exceptions import (
    ConfigError,
    EvaluationError,
    MalformedAddress,
    ModelError,
    V6ForgeError,
)
from .factory import get_classifier, list_classifiers

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "EvaluationError",
    "MalformedAddress",
    "ModelError",
    "SeedSet",
    "V6ForgeError",
    "canonicalize",
    "get_classifier",
    "list_classifiers",
    "load_seed_file",
    "parse_text",
    "write_seed_file",
]
