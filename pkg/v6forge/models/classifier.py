"""Seed classifier descriptions."""

from dataclasses import dataclass, field
from typing import List


@dataclass
class ClassifierInfo:
    """Static description of a seed classification mode.

    Returned by list_classifiers() so callers can present the available
    modes without instantiating them.
    """

    name: str
    """Human-readable name (e.g., "Manual classification")."""

    mode: str
    """Mode identifier used in get_classifier() and config files."""

    description: str
    """One-line summary of how seeds are split."""

    categories: List[str] = field(default_factory=list)
    """Category names the classifier always produces; empty when data-dependent."""
