"""Abstract base class for seed classifiers."""

from abc import ABC, abstractmethod
from typing import Dict

from ...addr6 import SeedSet
from ...models import ClassifierInfo


class SeedClassifier(ABC):
    """Splits a seed set into categories that are trained separately.

    Each mode (none, manual rules, entropy clustering) implements this
    interface so the train and generate stages can treat them alike.

    Subclasses guarantee:
    - every input seed lands in exactly one category
    - category order and membership are deterministic
    """

    @property
    @abstractmethod
    def info(self) -> ClassifierInfo:
        """Return static classifier information."""
        pass

    @abstractmethod
    def classify(self, seeds: SeedSet) -> Dict[str, SeedSet]:
        """Partition seeds into named categories.

        Args:
            seeds: Set to split.

        Returns:
            Ordered mapping from category name to its members. Categories
            may be empty.

        Raises:
            TooFewGroups: If a clustering classifier cannot form its clusters.
        """
        pass
