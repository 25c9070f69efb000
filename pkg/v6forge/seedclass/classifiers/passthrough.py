"""The no-op classifier: every seed in one category."""

from typing import Dict

from ...addr6 import SeedSet
from ...models import ClassifierInfo
from .base import SeedClassifier

ALL_CATEGORY = "all"


class PassthroughClassifier(SeedClassifier):
    """Keeps the seed set whole."""

    _info = ClassifierInfo(
        name="No classification",
        mode="none",
        description="Train one model on the whole seed set",
        categories=[ALL_CATEGORY],
    )

    def __init__(self, workers: int = 1):
        """Initialize the classifier.

        Args:
            workers: Accepted so every mode takes the same base options.
        """
        self._workers = workers

    @property
    def info(self) -> ClassifierInfo:
        return self._info

    def classify(self, seeds: SeedSet) -> Dict[str, SeedSet]:
        return {ALL_CATEGORY: seeds}
