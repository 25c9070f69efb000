"""Classifier that clusters prefix groups by their entropy fingerprints.

Seeds are grouped by prefix (a /32 by default). Every group with enough
members gets a fingerprint over nybbles a..b; fingerprints are clustered
with k-means and each cluster becomes one category holding the seeds of
its groups. Groups below the size threshold go to "unclustered".
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from loguru import logger

from ...addr6 import SeedSet
from ...exceptions import TooFewGroups
from ...models import ClassifierInfo
from ...utils import ordered_map
from ..entropy import DEFAULT_FIRST_NYBBLE, DEFAULT_LAST_NYBBLE, EntropyFingerprint, fingerprint
from ..grouping import DEFAULT_PREFIX_NYBBLES, group_by_prefix
from ..kmeans import DEFAULT_RESTARTS, ClusterModel, ElbowResult, elbow, kmeans
from .base import SeedClassifier

UNCLUSTERED = "unclustered"
DEFAULT_MIN_GROUP = 10
DEFAULT_K_MAX = 20


def cluster_name(index: int) -> str:
    """Category name of a 0-based cluster index."""
    return f"cluster_{index + 1}"


@dataclass
class ClusteringResult:
    """Everything a clustering run produced."""

    fingerprints: List[EntropyFingerprint]
    """One fingerprint per eligible group, sorted by prefix."""

    model: Optional[ClusterModel]
    """Chosen model, or None when no group was large enough."""

    partition: Dict[str, SeedSet]
    """cluster_1..cluster_k, then unclustered."""

    elbow: Optional[ElbowResult] = None
    """SSE curve, when k was chosen automatically."""

    small_groups: Tuple[str, ...] = field(default=())
    """Prefixes routed to the unclustered pool."""


class EntropyClusterClassifier(SeedClassifier):
    """Unsupervised classification by entropy fingerprint clustering.

    Example:
        classifier = EntropyClusterClassifier(k=None, rng_seed=7)
        result = classifier.cluster(seeds)
        print(result.elbow.sse_curve, result.model.k)
    """

    _info = ClassifierInfo(
        name="Unsupervised clustering",
        mode="cluster",
        description="k-means over per-prefix entropy fingerprints",
        categories=[],
    )

    def __init__(
        self,
        k: Optional[int] = None,
        k_max: int = DEFAULT_K_MAX,
        prefix_nybbles: int = DEFAULT_PREFIX_NYBBLES,
        min_group: int = DEFAULT_MIN_GROUP,
        a: int = DEFAULT_FIRST_NYBBLE,
        b: int = DEFAULT_LAST_NYBBLE,
        rng_seed: int = 0,
        restarts: int = DEFAULT_RESTARTS,
        workers: int = 1,
    ):
        """Initialize the classifier.

        Args:
            k: Fixed cluster count, or None to pick k with the elbow method.
            k_max: Largest k tried by the elbow method.
            prefix_nybbles: Grouping prefix length (8 = /32).
            min_group: Groups smaller than this are not fingerprinted.
            a: First fingerprint nybble (1-based).
            b: Last fingerprint nybble (1-based).
            rng_seed: Seed for k-means initialization.
            restarts: k-means restarts per k during the elbow search.
            workers: Threads used for per-group fingerprinting.
        """
        if k is not None and k < 1:
            raise ValueError(f"k must be at least 1, got {k}")
        self.k = k
        self.k_max = k_max
        self.prefix_nybbles = prefix_nybbles
        self.min_group = min_group
        self.a = a
        self.b = b
        self.rng_seed = rng_seed
        self.restarts = restarts
        self._workers = workers

    @property
    def info(self) -> ClassifierInfo:
        return self._info

    def cluster(self, seeds: SeedSet) -> ClusteringResult:
        """Group, fingerprint and cluster a seed set.

        Raises:
            TooFewGroups: If a fixed k exceeds the number of eligible groups.
        """
        groups = group_by_prefix(seeds, self.prefix_nybbles)
        eligible = [prefix for prefix, members in groups.items() if len(members) >= self.min_group]
        small = tuple(prefix for prefix in groups if len(groups[prefix]) < self.min_group)

        logger.info(
            f"{len(groups)} prefix groups, {len(eligible)} with at least {self.min_group} addresses"
        )

        fingerprints = ordered_map(
            lambda prefix: fingerprint(groups[prefix], self.a, self.b),
            eligible,
            self._workers,
        )

        unclustered = [seq for prefix in small for seq in groups[prefix]]

        if not fingerprints:
            if self.k is not None:
                raise TooFewGroups(groups=0, k=self.k)
            return ClusteringResult(
                fingerprints=[],
                model=None,
                partition={UNCLUSTERED: seeds.subset(unclustered, f"{seeds.source_label}#{UNCLUSTERED}")},
                small_groups=small,
            )

        elbow_result = None
        if self.k is not None:
            model = kmeans(fingerprints, self.k, self.rng_seed)
        elif len(fingerprints) < 2:
            model = kmeans(fingerprints, 1, self.rng_seed)
        else:
            elbow_result = elbow(
                fingerprints,
                min(self.k_max, len(fingerprints)),
                self.rng_seed,
                restarts=self.restarts,
            )
            model = elbow_result.model_for(elbow_result.chosen_k)

        buckets: List[List[str]] = [[] for _ in range(model.k)]
        for prefix, cluster in zip(eligible, model.assignments):
            buckets[cluster].extend(groups[prefix].members)

        partition = {
            cluster_name(i): seeds.subset(members, f"{seeds.source_label}#{cluster_name(i)}")
            for i, members in enumerate(buckets)
        }
        partition[UNCLUSTERED] = seeds.subset(unclustered, f"{seeds.source_label}#{UNCLUSTERED}")

        return ClusteringResult(
            fingerprints=list(fingerprints),
            model=model,
            partition=partition,
            elbow=elbow_result,
            small_groups=small,
        )

    def classify(self, seeds: SeedSet) -> Dict[str, SeedSet]:
        return self.cluster(seeds).partition
