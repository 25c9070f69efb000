"""Factory functions for creating seed classifiers."""

from typing import Dict

from .models import ClassifierInfo
from .seedclass.classifiers import CLASSIFIER_REGISTRY, SeedClassifier


def get_classifier(mode: str, **options) -> SeedClassifier:
    """Create a seed classifier.

    Args:
        mode: Classification mode ("none", "manual", "cluster").
        **options: Constructor options of the chosen classifier
            (e.g. workers, or k/rng_seed/min_group for "cluster").

    Returns:
        Configured SeedClassifier instance.

    Raises:
        ValueError: If mode is not recognized.

    Example:
        classifier = get_classifier("cluster", k=None, rng_seed=7)
        partition = classifier.classify(seeds)
    """
    if mode not in CLASSIFIER_REGISTRY:
        available = ", ".join(CLASSIFIER_REGISTRY.keys())
        raise ValueError(f"Unknown classification mode: '{mode}'. Available: {available}")

    classifier_class = CLASSIFIER_REGISTRY[mode]
    return classifier_class(**options)


def list_classifiers() -> Dict[str, ClassifierInfo]:
    """List all classification modes.

    Returns:
        Dict mapping mode names to ClassifierInfo objects.

    Example:
        for mode, info in list_classifiers().items():
            print(f"{mode}: {info.name} - {info.description}")
    """
    return {mode: classifier_class._info for mode, classifier_class in CLASSIFIER_REGISTRY.items()}
