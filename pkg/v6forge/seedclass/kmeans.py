"""Seeded k-means over entropy fingerprints, with elbow-method selection of k.

Initialization is distance-weighted (k-means++) from a numpy Generator
seeded with rng_seed, so a given seed always reproduces the same model.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
from loguru import logger

from ..exceptions import TooFewGroups
from .entropy import EntropyFingerprint

DEFAULT_MAX_ITER = 300
DEFAULT_RESTARTS = 5

Points = Union[Sequence[EntropyFingerprint], np.ndarray]


@dataclass
class ClusterModel:
    """Result of one k-means run."""

    k: int
    """Number of clusters."""

    centroids: np.ndarray
    """(k, d) cluster centres in fingerprint space."""

    assignments: Tuple[int, ...]
    """Cluster index of each input fingerprint, in input order."""

    sse: float
    """Sum of squared Euclidean distances to the assigned centroids."""

    rng_seed: int
    """Seed that produced the initial centroids."""

    iterations: int = 0
    """Lloyd iterations performed."""

    sse_trace: Tuple[float, ...] = field(default=())
    """SSE after every assignment step; never increases."""

    def members(self, cluster: int) -> List[int]:
        """Input indices assigned to a cluster."""
        return [i for i, c in enumerate(self.assignments) if c == cluster]


@dataclass
class ElbowResult:
    """SSE curve for k = 1..k_max and the knee it implies."""

    sse_curve: Tuple[float, ...]
    """Best SSE over restarts for each k, starting at k = 1."""

    chosen_k: int
    """k at the knee of the curve."""

    models: Tuple[ClusterModel, ...] = field(default=(), repr=False)
    """Best model for each k, aligned with sse_curve."""

    def model_for(self, k: int) -> ClusterModel:
        return self.models[k - 1]


def _as_points(fingerprints: Points) -> np.ndarray:
    if isinstance(fingerprints, np.ndarray):
        return np.asarray(fingerprints, dtype=np.float64)
    if len(fingerprints) == 0:
        return np.zeros((0, 0), dtype=np.float64)
    return np.stack([fp.as_array() for fp in fingerprints])


def _squared_distances(points: np.ndarray, centroids: np.ndarray) -> np.ndarray:
    diff = points[:, np.newaxis, :] - centroids[np.newaxis, :, :]
    return np.einsum("nkd,nkd->nk", diff, diff)


def _seed_centroids(points: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    n = points.shape[0]
    chosen = [int(rng.integers(n))]
    nearest = _squared_distances(points, points[chosen])[:, 0]

    while len(chosen) < k:
        total = nearest.sum()
        if total > 0:
            index = int(rng.choice(n, p=nearest / total))
        else:
            # every point coincides with a centre already; pick any unused one
            unused = np.setdiff1d(np.arange(n), chosen)
            index = int(rng.choice(unused))
        chosen.append(index)
        nearest = np.minimum(nearest, _squared_distances(points, points[[index]])[:, 0])

    return points[chosen].copy()


def _assign(points: np.ndarray, centroids: np.ndarray) -> Tuple[np.ndarray, float]:
    distances = _squared_distances(points, centroids)
    labels = np.argmin(distances, axis=1)
    return labels, float(distances[np.arange(points.shape[0]), labels].sum())


def _update(points: np.ndarray, labels: np.ndarray, centroids: np.ndarray) -> np.ndarray:
    updated = centroids.copy()
    for cluster in range(centroids.shape[0]):
        mask = labels == cluster
        if mask.any():
            updated[cluster] = points[mask].mean(axis=0)
    return updated


def kmeans(
    fingerprints: Points,
    k: int,
    rng_seed: int = 0,
    max_iter: int = DEFAULT_MAX_ITER,
) -> ClusterModel:
    """Cluster fingerprints with Lloyd's algorithm.

    Iterates until assignments stop changing or max_iter is reached.
    The returned assignments are always nearest-centroid for the returned
    centroids.

    Args:
        fingerprints: EntropyFingerprint list or an (n, d) array.
        k: Number of clusters, at least 1.
        rng_seed: Seed for centroid initialization.
        max_iter: Iteration cap.

    Raises:
        TooFewGroups: If there are fewer fingerprints than k.
        ValueError: If k < 1.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")

    points = _as_points(fingerprints)
    n = points.shape[0]
    if n < k:
        raise TooFewGroups(groups=n, k=k)

    rng = np.random.default_rng(rng_seed)
    centroids = _seed_centroids(points, k, rng)
    labels, sse = _assign(points, centroids)
    trace = [sse]

    iterations = 0
    for iterations in range(1, max_iter + 1):
        centroids = _update(points, labels, centroids)
        new_labels, sse = _assign(points, centroids)
        trace.append(sse)
        converged = np.array_equal(new_labels, labels)
        labels = new_labels
        if converged:
            break

    logger.debug(f"k-means k={k} seed={rng_seed}: sse={sse:.6f} after {iterations} iterations")

    return ClusterModel(
        k=k,
        centroids=centroids,
        assignments=tuple(int(c) for c in labels),
        sse=sse,
        rng_seed=rng_seed,
        iterations=iterations,
        sse_trace=tuple(trace),
    )


def restart_seed(rng_seed: int, k: int, restart: int) -> int:
    """Derived seed for one restart of one k."""
    return int(np.random.SeedSequence([rng_seed, k, restart]).generate_state(1)[0])


def knee(sse_curve: Sequence[float]) -> int:
    """k with the largest second difference of the SSE curve.

    The curve is extended flat past its end, so the last k is scored by
    its own drop. A curve with no positive second difference anywhere
    (nothing gained by splitting) picks k = 1.
    """
    if len(sse_curve) < 2:
        return 1

    extended = list(sse_curve) + [sse_curve[-1]]
    best_k, best_score = 1, 0.0
    for k in range(2, len(sse_curve) + 1):
        # extended[k - 1] is SSE at k
        score = extended[k - 2] - 2 * extended[k - 1] + extended[k]
        if score > best_score:
            best_k, best_score = k, score
    return best_k


def elbow(
    fingerprints: Points,
    k_max: int,
    rng_seed: int = 0,
    restarts: int = DEFAULT_RESTARTS,
    override: Optional[int] = None,
) -> ElbowResult:
    """Run k-means for k = 1..k_max and pick k at the knee.

    Args:
        fingerprints: EntropyFingerprint list or an (n, d) array.
        k_max: Largest k to try, at least 2.
        rng_seed: Base seed; each (k, restart) pair gets a derived seed.
        restarts: Runs per k; the lowest SSE is kept.
        override: Use this k instead of the knee.

    Raises:
        TooFewGroups: Propagated from kmeans when k_max exceeds the input size.
        ValueError: If k_max < 2.
    """
    if k_max < 2:
        raise ValueError(f"k_max must be at least 2, got {k_max}")

    points = _as_points(fingerprints)
    models = []
    for k in range(1, k_max + 1):
        runs = [kmeans(points, k, restart_seed(rng_seed, k, r)) for r in range(max(1, restarts))]
        models.append(min(runs, key=lambda m: m.sse))

    curve = tuple(m.sse for m in models)
    chosen = knee(curve) if override is None else override
    logger.info(f"Elbow over k=1..{k_max}: chose k={chosen}")

    return ElbowResult(sse_curve=curve, chosen_k=chosen, models=tuple(models))
