"""Text reports for seed classification and clustering."""

from typing import Iterable, List, Mapping, Sequence

import numpy as np

from ..addr6 import SeedSet
from .manual import SchemeLabel

_SCHEME_TITLES = {label.value: label.display_name for label in SchemeLabel}


def category_title(category: str) -> str:
    """Display name of a category ("fixed_iid" -> "Fixed IID")."""
    return _SCHEME_TITLES.get(category, category)


def classification_report(partition: Mapping[str, SeedSet]) -> List[str]:
    """One aligned line per category: name, count, percentage of the total.

    An empty partition total reports 0.00% for every category.
    """
    total = sum(len(members) for members in partition.values())
    titles = [category_title(name) for name in partition]
    width = max([len(title) for title in titles] + [len("Total")])

    lines = []
    for title, members in zip(titles, partition.values()):
        share = 100.0 * len(members) / total if total else 0.0
        lines.append(f"{title:<{width}}  {len(members):>10,}  {share:6.2f}%")
    lines.append(f"{'Total':<{width}}  {total:>10,}  {100.0 if total else 0.0:6.2f}%")
    return lines


def classification_key_values(partition: Mapping[str, SeedSet]) -> List[str]:
    """Machine-readable count and percentage lines for every category."""
    total = sum(len(members) for members in partition.values())
    lines = [f"total={total}"]
    for name, members in partition.items():
        share = 100.0 * len(members) / total if total else 0.0
        lines.append(f"{name}.count={len(members)}")
        lines.append(f"{name}.percent={share:.2f}")
    return lines


def format_vector(values: Iterable[float]) -> str:
    """Comma-separated decimals with fixed precision."""
    return ",".join(f"{float(v):.6f}" for v in values)


def centroid_lines(centroids: np.ndarray) -> List[str]:
    """One line per cluster, in cluster-id order: the centroid vector alone."""
    return [format_vector(row) for row in centroids]


def assignment_lines(prefixes: Sequence[str], assignments: Sequence[int]) -> List[str]:
    """One line per group: prefix, then its 1-based cluster id."""
    return [f"{prefix},{cluster + 1}" for prefix, cluster in zip(prefixes, assignments)]
