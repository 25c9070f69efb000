"""Prefix grouping of seed sets."""

from typing import Dict, List

from ..addr6 import NYBBLES, SeedSet
from ..exceptions import BadRange

DEFAULT_PREFIX_NYBBLES = 8  # a /32


def group_by_prefix(seeds: SeedSet, prefix_nybbles: int = DEFAULT_PREFIX_NYBBLES) -> Dict[str, SeedSet]:
    """Partition a set by its leading nybbles.

    Args:
        seeds: Set to partition.
        prefix_nybbles: Prefix length in nybbles, 1..31 (8 is a /32).

    Returns:
        Mapping from prefix to the members sharing it, sorted by prefix.
        Member order inside each group follows the input set.

    Raises:
        BadRange: If prefix_nybbles is outside 1..31.
    """
    if not 1 <= prefix_nybbles < NYBBLES:
        raise BadRange(f"Prefix length {prefix_nybbles} is outside 1..{NYBBLES - 1}", a=prefix_nybbles)

    buckets: Dict[str, List[str]] = {}
    for seq in seeds:
        buckets.setdefault(seq[:prefix_nybbles], []).append(seq)

    return {
        prefix: SeedSet(members=tuple(buckets[prefix]), source_label=f"{seeds.source_label}#{prefix}")
        for prefix in sorted(buckets)
    }
