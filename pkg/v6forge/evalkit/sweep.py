"""N_new and r_gen as the sampling count grows."""

from typing import Callable, List, Sequence, Tuple

from loguru import logger

from ..addr6 import NybbleSeq, SeedSet
from .oracle import ActivityOracle
from .report import GenerationReport, evaluate

SweepFn = Callable[[int], List[NybbleSeq]]


def sampling_sweep(
    generate_fn: SweepFn,
    ns: Sequence[int],
    seeds: SeedSet,
    oracle: ActivityOracle,
    exclude_seeds: bool = False,
) -> List[Tuple[int, GenerationReport]]:
    """Evaluate generate_fn(n) for every sampling count n, in ascending order."""
    results = []
    for n in sorted(set(ns)):
        report = evaluate(generate_fn(n), seeds, oracle, n, exclude_seeds=exclude_seeds)
        logger.info(f"Sweep N={n}: n_new={report.n_new} n_candidate={report.n_candidate}")
        results.append((n, report))
    return results
