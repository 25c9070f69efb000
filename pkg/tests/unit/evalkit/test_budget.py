"""Unit tests for budget allocation across categories."""

from fractions import Fraction

import pytest

from tests.mocks import MockOracle, ScriptedGenerator
from v6forge.addr6 import SeedSet
from v6forge.evalkit import allocate_budget, generate_with_budget, pilot_rates
from v6forge.exceptions import AllRatesZero


def _seq(i: int) -> str:
    return f"20010db8{i:024x}"


class TestAllocateBudget:
    """Tests for allocate_budget."""

    def test_equal_rates(self):
        assert allocate_budget([("a", 0.5), ("b", 0.5)], 100) == [("a", 50), ("b", 50)]

    def test_four_categories(self):
        rates = [("fixed", 4.35), ("low64", 0.61), ("eui64", 0.13), ("privacy", 1.34)]
        assert allocate_budget(rates, 1000) == [
            ("fixed", 677), ("low64", 95), ("eui64", 20), ("privacy", 208),
        ]

    def test_single_nonzero_rate_takes_everything(self):
        assert allocate_budget([("a", 0), ("b", Fraction(1, 7)), ("c", 0)], 33) == [
            ("a", 0), ("b", 33), ("c", 0),
        ]

    def test_scale_invariant(self):
        rates = [("a", 3), ("b", 5), ("c", 11)]
        scaled = [(name, rate * 1000) for name, rate in rates]
        assert allocate_budget(rates, 997) == allocate_budget(scaled, 997)

    def test_ties_go_to_earlier_category(self):
        assert allocate_budget([("a", 1), ("b", 1), ("c", 1)], 4) == [("a", 2), ("b", 1), ("c", 1)]

    @pytest.mark.parametrize("n_total", [0, 1, 7, 1000, 123_457])
    def test_sums_to_total(self, n_total):
        allocation = allocate_budget([("a", 0.3), ("b", 0.01), ("c", 2)], n_total)
        assert sum(draws for _, draws in allocation) == n_total

    def test_all_zero(self):
        with pytest.raises(AllRatesZero):
            allocate_budget([("a", 0), ("b", 0.0)], 10)

    def test_negative_rate(self):
        with pytest.raises(ValueError):
            allocate_budget([("a", -0.1), ("b", 1)], 10)


class TestPilotAndBudget:
    """Tests for pilot_rates and generate_with_budget."""

    @pytest.fixture
    def setup(self):
        scripts = {
            "good": [_seq(i) for i in range(0, 100)],
            "poor": [_seq(i) for i in range(1000, 1100)],
            "dead": [],
        }
        active = [_seq(i) for i in range(0, 100, 2)] + [_seq(1000)]
        categories = {
            name: SeedSet.from_iterable([_seq(5000 + i)], source_label=name) for i, name in enumerate(scripts)
        }
        return categories, ScriptedGenerator(scripts), MockOracle(active)

    def test_pilot_rates(self, setup):
        categories, generator, oracle = setup
        rates = pilot_rates(categories, generator, oracle, pilot_n=10)
        assert rates == [("good", Fraction(1, 2)), ("poor", Fraction(1, 10)), ("dead", Fraction(0))]
        assert generator.calls == [("good", 10), ("poor", 10), ("dead", 10)]

    def test_generate_with_budget(self, setup):
        categories, generator, oracle = setup
        candidates, allocation = generate_with_budget(categories, generator, oracle, n_total=60, pilot_n=10)
        assert allocation == [("good", 50), ("poor", 10), ("dead", 0)]
        assert generator.calls[3:] == [("good", 50), ("poor", 10)]
        assert len(candidates) == 60
        assert len(set(candidates)) == 60

    def test_no_active_pilot_splits_evenly(self):
        scripts = {
            "a": [_seq(i) for i in range(0, 50)],
            "b": [_seq(i) for i in range(100, 150)],
            "c": [_seq(i) for i in range(200, 250)],
        }
        categories = {name: SeedSet.from_iterable([_seq(9000)], source_label=name) for name in scripts}
        generator = ScriptedGenerator(scripts)
        candidates, allocation = generate_with_budget(
            categories, generator, MockOracle([_seq(9000)]), n_total=31, pilot_n=5
        )
        assert allocation == [("a", 11), ("b", 10), ("c", 10)]
        assert generator.calls[3:] == [("a", 11), ("b", 10), ("c", 10)]
        assert len(candidates) == 31
