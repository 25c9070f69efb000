"""Candidate generation by sampling the latent prior."""

from typing import List

import numpy as np
from loguru import logger

from ..addr6 import NybbleSeq, decode_argmax, sequences_from_array
from .model import decode
from .params import VaeParams

SAMPLING_MODES = ("argmax", "sample")
DEFAULT_CHUNK = 4096


def _sample_rows(grids: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """Draw one symbol per row from each row's distribution."""
    cumulative = np.cumsum(grids, axis=-1)
    u = rng.random(grids.shape[:-1] + (1,)) * cumulative[..., -1:]
    picks = (cumulative < u).sum(axis=-1)
    return np.minimum(picks, grids.shape[-1] - 1)


def generate(
    params: VaeParams,
    n: int,
    rng_seed: int = 0,
    sampling: str = "argmax",
    chunk: int = DEFAULT_CHUNK,
) -> List[NybbleSeq]:
    """Decode n draws of z ~ N(0, I) into candidate nybble sequences.

    Args:
        params: Trained model.
        n: Sampling count N.
        rng_seed: Seed for the latent draws (and row sampling).
        sampling: 'argmax' takes the most likely symbol per position;
            'sample' draws it from the row distribution.
        chunk: Draws decoded per batch.

    Returns:
        Candidates in first-drawn order with duplicates removed.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if sampling not in SAMPLING_MODES:
        raise ValueError(f"sampling must be one of {', '.join(SAMPLING_MODES)}, got {sampling!r}")

    rng = np.random.default_rng(rng_seed)
    seen = {}
    for start in range(0, n, chunk):
        count = min(chunk, n - start)
        z = rng.standard_normal((count, params.shape.latent)).astype(np.float32)
        grids = decode(params, z)
        if sampling == "argmax":
            batch = decode_argmax(grids)
        else:
            batch = sequences_from_array(_sample_rows(grids, rng))
        seen.update(dict.fromkeys(batch))

    candidates = list(seen)
    logger.debug(f"Generated {len(candidates)} unique candidates from {n} draws")
    return candidates
