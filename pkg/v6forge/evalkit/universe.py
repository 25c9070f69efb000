"""Deterministic synthetic active universe and a random-IID control arm.

The universe mixes the four structured addressing schemes under a few
synthetic /32 prefixes:

- fixed IID: twelve zero nybbles then four non-zero ones
- low 64-bit subnet: 0000 xy 00000000 zw
- SLAAC EUI-64: vendor MAC with ff:fe inserted and the U/L bit flipped
- SLAAC privacy: random IIDs of high symbol entropy
"""

from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence, Tuple

import numpy as np
from loguru import logger

from ..addr6 import NYBBLES, NybbleSeq, SeedSet, sequences_from_array
from ..exceptions import SampleExceedsUniverse
from ..seedclass import SchemeLabel, classify_manual
from .oracle import SetOracle

PREFIX_NYBBLES = 8
SUBNET_NYBBLES = 8
IID_NYBBLES = 16

VENDOR_OUIS = (0x001B63, 0x3C5AB4, 0xB827EB, 0x00163E)
MAX_FILL_ROUNDS = 64


@dataclass(frozen=True)
class UniverseConfig:
    """Shape of the hidden active universe and the seed sample."""

    rng_seed: int = 0
    """Seeds every random choice."""

    prefixes: int = 4
    """Synthetic /32 prefixes."""

    subnets: int = 16
    """/64 subnets used per prefix."""

    fixed_iid: int = 16_384
    """Fixed-IID hosts."""

    low64_subnet: int = 16_384
    """Low 64-bit subnet hosts."""

    eui64: int = 16_384
    """SLAAC EUI-64 hosts."""

    privacy: int = 16_384
    """SLAAC privacy hosts."""

    sample: int = 5_000
    """Seeds drawn from the universe without replacement."""

    def __post_init__(self):
        for name in ("prefixes", "subnets", "fixed_iid", "low64_subnet", "eui64", "privacy", "sample"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")

    @property
    def universe_size(self) -> int:
        return self.fixed_iid + self.low64_subnet + self.eui64 + self.privacy


def _digits(values: np.ndarray, width: int) -> np.ndarray:
    """(m,) integers to (m, width) big-endian nybbles."""
    shifts = 4 * np.arange(width - 1, -1, -1)
    return ((values[:, np.newaxis].astype(np.int64) >> shifts) & 0xF).astype(np.uint8)


def _nonzero(rng: np.random.Generator, m: int, width: int) -> np.ndarray:
    return rng.integers(1, 16, size=(m, width), dtype=np.uint8)


def _zeros(m: int, width: int) -> np.ndarray:
    return np.zeros((m, width), dtype=np.uint8)


def _fixed_iid(rng: np.random.Generator, m: int) -> np.ndarray:
    return np.hstack([_zeros(m, 12), _nonzero(rng, m, 4)])


def _low64_subnet(rng: np.random.Generator, m: int) -> np.ndarray:
    return np.hstack([_zeros(m, 4), _nonzero(rng, m, 2), _zeros(m, 8), _nonzero(rng, m, 2)])


def _eui64(rng: np.random.Generator, m: int) -> np.ndarray:
    ouis = np.asarray(VENDOR_OUIS, dtype=np.int64)[rng.integers(len(VENDOR_OUIS), size=m)]
    ouis ^= 0x020000
    marker = np.tile(np.array([0xF, 0xF, 0xF, 0xE], dtype=np.uint8), (m, 1))
    nic = rng.integers(0, 16, size=(m, 6), dtype=np.uint8)
    return np.hstack([_digits(ouis, 6), marker, nic])


def _privacy(rng: np.random.Generator, m: int) -> np.ndarray:
    return rng.integers(0, 16, size=(m, IID_NYBBLES), dtype=np.uint8)


SCHEMES: Dict[SchemeLabel, Callable[[np.random.Generator, int], np.ndarray]] = {
    SchemeLabel.FIXED_IID: _fixed_iid,
    SchemeLabel.LOW64_SUBNET: _low64_subnet,
    SchemeLabel.SLAAC_EUI64: _eui64,
    SchemeLabel.SLAAC_PRIVACY: _privacy,
}


def _draw_prefixes(rng: np.random.Generator, count: int) -> np.ndarray:
    """Distinct 2000::/4 /32 prefixes as (count, 8) nybbles."""
    chosen = {}
    while len(chosen) < count:
        value = 0x20000000 | int(rng.integers(0, 1 << 28))
        chosen.setdefault(value, None)
    return _digits(np.fromiter(chosen, dtype=np.int64, count=count), PREFIX_NYBBLES)


def _fill_scheme(
    rng: np.random.Generator,
    label: SchemeLabel,
    count: int,
    prefixes: np.ndarray,
    subnets: int,
    taken: Dict[NybbleSeq, None],
) -> List[NybbleSeq]:
    members: Dict[NybbleSeq, None] = {}
    for _ in range(MAX_FILL_ROUNDS):
        missing = count - len(members)
        if missing == 0:
            break
        m = 2 * missing + 16
        prefix = prefixes[rng.integers(len(prefixes), size=m)]
        subnet = _digits(rng.integers(0, subnets, size=m), SUBNET_NYBBLES)
        rows = np.hstack([prefix, subnet, SCHEMES[label](rng, m)])
        for seq in sequences_from_array(rows):
            if len(members) == count:
                break
            if seq not in members and seq not in taken and classify_manual(seq) is label:
                members[seq] = None
    if len(members) < count:
        raise ValueError(f"could not place {count} {label.value} hosts; raise prefixes or subnets")
    return list(members)


def synth_universe(cfg: UniverseConfig = UniverseConfig()) -> Tuple[SetOracle, SeedSet]:
    """Build the hidden universe and draw the seed sample.

    Returns:
        The universe oracle and the seed sample, in universe order.

    Raises:
        SampleExceedsUniverse: If cfg.sample is larger than the universe.
    """
    if cfg.sample > cfg.universe_size:
        raise SampleExceedsUniverse(cfg.sample, cfg.universe_size)

    rng = np.random.default_rng(cfg.rng_seed)
    prefixes = _draw_prefixes(rng, cfg.prefixes)
    counts = {
        SchemeLabel.FIXED_IID: cfg.fixed_iid,
        SchemeLabel.LOW64_SUBNET: cfg.low64_subnet,
        SchemeLabel.SLAAC_EUI64: cfg.eui64,
        SchemeLabel.SLAAC_PRIVACY: cfg.privacy,
    }

    universe: Dict[NybbleSeq, None] = {}
    for label, count in counts.items():
        members = _fill_scheme(rng, label, count, prefixes, cfg.subnets, universe)
        universe.update(dict.fromkeys(members))
        logger.debug(f"Universe: {count} {label.value} hosts")

    ordered = list(universe)
    picks = np.sort(rng.choice(len(ordered), size=cfg.sample, replace=False))
    seeds = SeedSet.from_iterable((ordered[i] for i in picks), source_label="synthetic seeds")
    oracle = SetOracle(
        ordered, descriptor=f"synthetic universe of {len(ordered)} (rng_seed={cfg.rng_seed})"
    )
    logger.info(f"Synthetic universe: {len(ordered)} active, {len(seeds)} seeds")
    return oracle, seeds


def prefix_pool(seeds: SeedSet, nybbles: int = 16) -> List[str]:
    """Distinct leading nybbles of the seeds, in first-seen order."""
    if not 1 <= nybbles < NYBBLES:
        raise ValueError(f"prefix length must be in 1..{NYBBLES - 1}, got {nybbles}")
    return list(dict.fromkeys(seq[:nybbles] for seq in seeds))


def random_baseline(n: int, prefix_pool: Sequence[str], rng_seed: int = 0) -> List[NybbleSeq]:
    """n distinct candidates: a pool prefix followed by uniform random nybbles.

    Args:
        n: Candidates to produce.
        prefix_pool: Nybble prefixes of one common length.
        rng_seed: Seed for prefix choice and suffixes.

    Raises:
        ValueError: On n < 1, an empty or mixed-length pool, or a pool too
            small to hold n distinct addresses.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    pool = list(dict.fromkeys(prefix_pool))
    if not pool:
        raise ValueError("prefix pool is empty")
    width = len(pool[0])
    if any(len(p) != width for p in pool) or not 1 <= width < NYBBLES:
        raise ValueError("prefix pool entries must share one length below 32 nybbles")
    suffix = NYBBLES - width
    if suffix < 16 and len(pool) * 16 ** suffix < n:
        raise ValueError(f"prefix pool cannot hold {n} distinct addresses")

    rng = np.random.default_rng(rng_seed)
    prefix_rows = np.array([[int(c, 16) for c in p] for p in pool], dtype=np.uint8)
    chosen: Dict[NybbleSeq, None] = {}
    while len(chosen) < n:
        m = n - len(chosen)
        rows = np.hstack(
            [
                prefix_rows[rng.integers(len(pool), size=m)],
                rng.integers(0, 16, size=(m, suffix), dtype=np.uint8),
            ]
        )
        for seq in sequences_from_array(rows):
            chosen.setdefault(seq, None)
    return list(chosen)[:n]
