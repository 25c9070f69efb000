"""Classifier that applies the addressing-scheme rules to every seed."""

from typing import Dict, List, Sequence

from loguru import logger

from ...addr6 import SeedSet
from ...models import ClassifierInfo
from ...utils import chunked, ordered_map
from ..manual import SchemeLabel, classify_manual
from .base import SeedClassifier

CLASSIFY_CHUNK = 20_000


def _label_chunk(chunk: Sequence[str]) -> List[SchemeLabel]:
    return [classify_manual(seq) for seq in chunk]


class SchemeClassifier(SeedClassifier):
    """One category per SchemeLabel, in label declaration order.

    Example:
        classifier = SchemeClassifier()
        parts = classifier.classify(seeds)
        fixed = parts["fixed_iid"]
    """

    _info = ClassifierInfo(
        name="Manual classification",
        mode="manual",
        description="Split by IID rules: EUI-64 marker, IID entropy, zero runs",
        categories=[label.value for label in SchemeLabel],
    )

    def __init__(self, workers: int = 1):
        """Initialize the classifier.

        Args:
            workers: Threads used to label chunks of seeds.
        """
        self._workers = workers

    @property
    def info(self) -> ClassifierInfo:
        return self._info

    def label_all(self, seeds: SeedSet) -> List[SchemeLabel]:
        """Label of every member, in set order."""
        labelled = ordered_map(_label_chunk, chunked(seeds.members, CLASSIFY_CHUNK), self._workers)
        return [label for chunk in labelled for label in chunk]

    def classify(self, seeds: SeedSet) -> Dict[str, SeedSet]:
        buckets: Dict[SchemeLabel, List[str]] = {label: [] for label in SchemeLabel}
        for seq, label in zip(seeds.members, self.label_all(seeds)):
            buckets[label].append(seq)

        logger.debug(
            "Manual classification: "
            + ", ".join(f"{label.value}={len(members)}" for label, members in buckets.items())
        )

        return {
            label.value: SeedSet(members=tuple(members), source_label=f"{seeds.source_label}#{label.value}")
            for label, members in buckets.items()
        }
