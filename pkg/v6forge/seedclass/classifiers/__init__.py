"""Seed classifier implementations."""

from .base import SeedClassifier
from .entropy_cluster import (
    UNCLUSTERED,
    ClusteringResult,
    EntropyClusterClassifier,
    cluster_name,
)
from .passthrough import ALL_CATEGORY, PassthroughClassifier
from .scheme import SchemeClassifier

# Classifier registry - maps mode names to classifier classes
CLASSIFIER_REGISTRY = {
    "none": PassthroughClassifier,
    "manual": SchemeClassifier,
    "cluster": EntropyClusterClassifier,
}

__all__ = [
    "ALL_CATEGORY",
    "CLASSIFIER_REGISTRY",
    "UNCLUSTERED",
    "ClusteringResult",
    "EntropyClusterClassifier",
    "PassthroughClassifier",
    "SchemeClassifier",
    "SeedClassifier",
    "cluster_name",
]
