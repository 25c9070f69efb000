"""Hit and generation rates of a candidate set."""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence

from loguru import logger

from ..addr6 import SeedSet
from ..exceptions import EmptyCandidates, EvaluationError
from ..utils.workers import chunked, ordered_map
from .oracle import ActivityOracle

EVALUATE_CHUNK = 65_536


def format_rate(rate: Fraction, digits: int = 2) -> str:
    """Render a ratio as a percentage, e.g. Fraction(1, 8) -> '12.50%'."""
    return f"{float(rate * 100):.{digits}f}%"


@dataclass(frozen=True)
class GenerationReport:
    """Counts behind r_hit and r_gen.

    Rates are exact fractions; format_rate turns them into percentages.
    """

    n_sampled: int
    """Draws requested from the generator (N)."""

    n_candidate: int
    """Duplicate-free candidates evaluated."""

    n_hit: int
    """Candidates the oracle reports active."""

    n_new: int
    """Active candidates that are not seeds."""

    def __post_init__(self):
        if not 0 <= self.n_new <= self.n_hit <= self.n_candidate <= self.n_sampled:
            raise EvaluationError(
                "report counts must satisfy n_new <= n_hit <= n_candidate <= n_sampled, got "
                f"{self.n_new}, {self.n_hit}, {self.n_candidate}, {self.n_sampled}"
            )
        if self.n_candidate == 0:
            raise EmptyCandidates()

    @property
    def r_hit(self) -> Fraction:
        return Fraction(self.n_hit, self.n_candidate)

    @property
    def r_gen(self) -> Fraction:
        return Fraction(self.n_new, self.n_candidate)

    def key_values(self) -> List[str]:
        """Machine-readable key=value lines."""
        return [
            f"n_sampled={self.n_sampled}",
            f"n_candidate={self.n_candidate}",
            f"n_hit={self.n_hit}",
            f"n_new={self.n_new}",
            f"r_hit={format_rate(self.r_hit)}",
            f"r_gen={format_rate(self.r_gen)}",
        ]


REPORT_COLUMNS = ("Name", "N", "N_candidate", "N_hit", "N_new", "r_hit", "r_gen")


def report_table(rows: Sequence[tuple]) -> List[str]:
    """Aligned table of (name, GenerationReport) rows."""
    cells = [REPORT_COLUMNS]
    for name, report in rows:
        cells.append(
            (
                name,
                f"{report.n_sampled:,}",
                f"{report.n_candidate:,}",
                f"{report.n_hit:,}",
                f"{report.n_new:,}",
                format_rate(report.r_hit),
                format_rate(report.r_gen),
            )
        )
    widths = [max(len(row[i]) for row in cells) for i in range(len(REPORT_COLUMNS))]
    lines = []
    for row in cells:
        first = row[0].ljust(widths[0])
        rest = [cell.rjust(width) for cell, width in zip(row[1:], widths[1:])]
        lines.append("  ".join([first] + rest))
    return lines


def evaluate(
    candidates: Sequence[str],
    seeds: SeedSet,
    oracle: ActivityOracle,
    n_sampled: int,
    exclude_seeds: bool = False,
    workers: int = 1,
) -> GenerationReport:
    """Score candidates against an oracle.

    Args:
        candidates: Duplicate-free nybble sequences.
        seeds: The training seeds; active candidates outside it count as new.
        oracle: Activity oracle.
        n_sampled: Sampling count N that produced the candidates.
        exclude_seeds: Drop seed members before counting.
        workers: Threads for oracle queries.

    Raises:
        EmptyCandidates: If nothing is left to evaluate.
        EvaluationError: On duplicate candidates or more candidates than draws.
    """
    if len(set(candidates)) != len(candidates):
        raise EvaluationError("candidates contain duplicates")
    if exclude_seeds:
        candidates = [seq for seq in candidates if seq not in seeds]
    if not candidates:
        raise EmptyCandidates()
    if len(candidates) > n_sampled:
        raise EvaluationError(f"{len(candidates)} candidates exceed {n_sampled} draws")

    def _score(chunk):
        hits = [seq for seq in chunk if oracle.is_active(seq)]
        return len(hits), sum(1 for seq in hits if seq not in seeds)

    results = ordered_map(_score, chunked(list(candidates), EVALUATE_CHUNK), workers)
    n_hit = sum(hit for hit, _ in results)
    n_new = sum(new for _, new in results)

    report = GenerationReport(
        n_sampled=n_sampled, n_candidate=len(candidates), n_hit=n_hit, n_new=n_new
    )
    logger.debug(f"Evaluated against {oracle.descriptor}: {' '.join(report.key_values())}")
    return report
