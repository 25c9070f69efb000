"""Normalized nybble entropy and entropy fingerprints.

Entropy is base 2 and divided by 4 (log2 of the 16-symbol alphabet), so
a constant column scores 0 and a column uniform over all 16 symbols
scores 1. Absent symbols contribute 0 (0 * log 0 = 0, no smoothing).

Nybble indices are 1-based throughout this module: index 1 is the most
significant nybble, 32 the least.
"""

import os
from collections import Counter
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..addr6 import ALPHABET, NYBBLES, SYMBOLS, SeedSet
from ..exceptions import BadRange, EmptySet

MAX_ENTROPY_BITS = 4.0

DEFAULT_FIRST_NYBBLE = 9
DEFAULT_LAST_NYBBLE = 32

_HEX = frozenset(ALPHABET)


@dataclass(frozen=True)
class EntropyFingerprint:
    """Per-nybble normalized entropies of an address group."""

    prefix: str
    """Leading nybbles shared by every member of the group."""

    a: int
    """First considered nybble index (1-based)."""

    b: int
    """Last considered nybble index (1-based, inclusive)."""

    values: Tuple[float, ...]
    """H(X_a) .. H(X_b), each in [0, 1]."""

    support: int
    """Number of addresses in the group."""

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=np.float64)


def normalized_entropy(counts: np.ndarray) -> float:
    """Entropy of a symbol histogram, normalized to [0, 1]."""
    total = counts.sum()
    if total == 0:
        return 0.0
    p = counts[counts > 0] / total
    h = float(-np.sum(p * np.log2(p))) / MAX_ENTROPY_BITS
    return min(1.0, max(0.0, h))


def _check_range(a: int, b: int) -> None:
    if not 1 <= a <= b <= NYBBLES:
        raise BadRange(f"Nybble range {a}..{b} is outside 1..{NYBBLES}", a=a, b=b)


def column_entropies(values: np.ndarray, a: int = 1, b: int = NYBBLES) -> np.ndarray:
    """Entropy of columns a..b of an (n, 32) symbol array."""
    _check_range(a, b)
    if values.shape[0] == 0:
        raise EmptySet()
    return np.array(
        [normalized_entropy(np.bincount(values[:, i - 1], minlength=SYMBOLS)) for i in range(a, b + 1)]
    )


def column_entropy(seeds: SeedSet, i: int) -> float:
    """H(X_i): normalized entropy of nybble i over the set.

    Raises:
        EmptySet: If the set is empty.
        BadRange: If i is outside 1..32.
    """
    _check_range(i, i)
    if len(seeds) == 0:
        raise EmptySet()
    return float(column_entropies(seeds.as_array(), i, i)[0])


def fingerprint(
    seeds: SeedSet,
    a: int = DEFAULT_FIRST_NYBBLE,
    b: int = DEFAULT_LAST_NYBBLE,
) -> EntropyFingerprint:
    """Entropy fingerprint (H(X_a), ..., H(X_b)) of a set.

    Defaults cover nybbles 9..32, i.e. everything below a /32 prefix.

    Raises:
        EmptySet: If the set is empty.
        BadRange: Unless 1 <= a <= b <= 32.
    """
    _check_range(a, b)
    if len(seeds) == 0:
        raise EmptySet()

    shared = os.path.commonprefix(list(seeds.members))[: a - 1]
    values = column_entropies(seeds.as_array(), a, b)
    return EntropyFingerprint(
        prefix=shared,
        a=a,
        b=b,
        values=tuple(float(v) for v in values),
        support=len(seeds),
    )


def address_char_entropy(iid: str) -> float:
    """Normalized entropy of the symbol distribution inside one 16-nybble IID.

    0 for a constant IID, 1 when all 16 symbols are distinct.
    """
    if len(iid) != 16 or not set(iid) <= _HEX:
        raise ValueError(f"IID must be 16 lowercase nybbles, got {iid!r}")
    counts = np.fromiter(Counter(iid).values(), dtype=np.int64)
    return normalized_entropy(counts)
