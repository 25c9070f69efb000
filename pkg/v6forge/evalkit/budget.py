"""Split a sampling budget across seed categories in proportion to r_gen."""

from fractions import Fraction
from numbers import Rational
from typing import Callable, Dict, List, Sequence, Tuple, Union

from loguru import logger

from ..addr6 import NybbleSeq, SeedSet
from ..exceptions import AllRatesZero, EmptyCandidates
from .oracle import ActivityOracle
from .report import evaluate, format_rate

Rate = Union[Fraction, float, int, str]
GenerateFn = Callable[[str, int], List[NybbleSeq]]


def _exact(rate: Rate) -> Fraction:
    if isinstance(rate, Rational):
        return Fraction(rate)
    # str() keeps decimal literals such as 4.35 exact
    return Fraction(str(rate))


def allocate_budget(
    category_rates: Sequence[Tuple[str, Rate]], n_total: int
) -> List[Tuple[str, int]]:
    """Largest-remainder apportionment of n_total draws.

    Each category gets floor(n_total * r / sum(r)); the draws left over
    go one each to the largest fractional remainders, ties to the
    earlier category.

    Args:
        category_rates: (category, r_gen) pairs; rates are ratios or
            percentages, only proportions matter.
        n_total: Draws to distribute.

    Returns:
        (category, draws) pairs in input order, summing to n_total.

    Raises:
        AllRatesZero: If no rate is positive.
        ValueError: On a negative rate or budget.
    """
    if n_total < 0:
        raise ValueError(f"n_total must not be negative, got {n_total}")
    rates = [(name, _exact(rate)) for name, rate in category_rates]
    for name, rate in rates:
        if rate < 0:
            raise ValueError(f"rate of {name!r} is negative: {rate}")
    total = sum(rate for _, rate in rates)
    if total == 0:
        raise AllRatesZero()

    quotas = [n_total * rate / total for _, rate in rates]
    draws = [int(q) for q in quotas]
    leftover = n_total - sum(draws)
    by_remainder = sorted(range(len(rates)), key=lambda i: (-(quotas[i] - draws[i]), i))
    for i in by_remainder[:leftover]:
        draws[i] += 1

    return [(name, count) for (name, _), count in zip(rates, draws)]


def pilot_rates(
    categories: Dict[str, SeedSet],
    generate_fn: GenerateFn,
    oracle: ActivityOracle,
    pilot_n: int,
) -> List[Tuple[str, Fraction]]:
    """Estimate r_gen per category from a small generation run.

    Args:
        categories: Seed set per category.
        generate_fn: generate_fn(category, n) returns candidates.
        oracle: Activity oracle.
        pilot_n: Draws per category.
    """
    rates = []
    for name, seeds in categories.items():
        candidates = generate_fn(name, pilot_n)
        try:
            rate = evaluate(candidates, seeds, oracle, pilot_n).r_gen
        except EmptyCandidates:
            rate = Fraction(0)
        logger.info(f"Pilot {name}: r_gen={format_rate(rate)} over {pilot_n} draws")
        rates.append((name, rate))
    return rates


def generate_with_budget(
    categories: Dict[str, SeedSet],
    generate_fn: GenerateFn,
    oracle: ActivityOracle,
    n_total: int,
    pilot_n: int,
) -> Tuple[List[NybbleSeq], List[Tuple[str, int]]]:
    """Pilot every category, then spend n_total draws by allocate_budget.

    When no pilot finds a new active address the rates carry no signal
    and the draws are split evenly instead.

    Returns:
        Merged duplicate-free candidates and the allocation used.
    """
    rates = pilot_rates(categories, generate_fn, oracle, pilot_n)
    try:
        allocation = allocate_budget(rates, n_total)
    except AllRatesZero:
        logger.warning(f"Every pilot r_gen is zero; splitting {n_total} draws evenly")
        allocation = allocate_budget([(name, 1) for name, _ in rates], n_total)
    merged = {}
    for name, draws in allocation:
        logger.info(f"Budget {name}: {draws} draws")
        if draws:
            merged.update(dict.fromkeys(generate_fn(name, draws)))
    return list(merged), allocation
