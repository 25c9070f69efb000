"""Seed classification: scheme rules, entropy fingerprints and k-means clustering."""

from .classifiers import (
    CLASSIFIER_REGISTRY,
    UNCLUSTERED,
    ClusteringResult,
    EntropyClusterClassifier,
    PassthroughClassifier,
    SchemeClassifier,
    SeedClassifier,
)
from .entropy import (
    EntropyFingerprint,
    address_char_entropy,
    column_entropies,
    column_entropy,
    fingerprint,
    normalized_entropy,
)
from .grouping import group_by_prefix
from .heatmap import render_heatmap
from .kmeans import ClusterModel, ElbowResult, elbow, kmeans, knee
from .manual import SchemeLabel, classify_manual, zero_runs
from .report import classification_key_values, classification_report

__all__ = [
    "CLASSIFIER_REGISTRY",
    "UNCLUSTERED",
    "ClusterModel",
    "ClusteringResult",
    "ElbowResult",
    "EntropyClusterClassifier",
    "EntropyFingerprint",
    "PassthroughClassifier",
    "SchemeClassifier",
    "SchemeLabel",
    "SeedClassifier",
    "address_char_entropy",
    "classification_key_values",
    "classification_report",
    "classify_manual",
    "column_entropies",
    "column_entropy",
    "elbow",
    "fingerprint",
    "group_by_prefix",
    "kmeans",
    "knee",
    "normalized_entropy",
    "render_heatmap",
    "zero_runs",
]
