"""Unit tests for evaluate and the generation report."""

from fractions import Fraction

import pytest

from tests.mocks import MockOracle
from v6forge.addr6 import SeedSet
from v6forge.evalkit import GenerationReport, evaluate, format_rate, report_table
from v6forge.exceptions import EmptyCandidates, EvaluationError


def _seq(i: int) -> str:
    return f"20010db8{i:024x}"


@pytest.fixture
def candidates():
    return [_seq(i) for i in range(10)]


@pytest.fixture
def seeds():
    return SeedSet.from_iterable([_seq(0), _seq(100)])


@pytest.fixture
def oracle():
    """Four of the ten candidates are active, one of them a seed."""
    return MockOracle([_seq(0), _seq(3), _seq(5), _seq(7), _seq(200)])


class TestEvaluate:
    """Tests for evaluate."""

    def test_counts(self, candidates, seeds, oracle):
        report = evaluate(candidates, seeds, oracle, n_sampled=20)
        assert (report.n_sampled, report.n_candidate, report.n_hit, report.n_new) == (20, 10, 4, 3)
        assert report.r_hit == Fraction(2, 5)
        assert report.r_gen == Fraction(3, 10)
        assert sorted(oracle.queries) == sorted(candidates)

    def test_exclude_seeds(self, candidates, seeds, oracle):
        report = evaluate(candidates, seeds, oracle, n_sampled=20, exclude_seeds=True)
        assert (report.n_candidate, report.n_hit, report.n_new) == (9, 3, 3)

    def test_only_seeds_left(self, seeds, oracle):
        with pytest.raises(EmptyCandidates):
            evaluate([_seq(0)], seeds, oracle, n_sampled=1, exclude_seeds=True)

    def test_all_seeds_counted_as_hits_not_new(self, seeds):
        oracle = MockOracle(seeds.members)
        report = evaluate(list(seeds), seeds, oracle, n_sampled=2)
        assert (report.n_hit, report.n_new) == (2, 0)
        assert report.r_gen == 0

    def test_empty(self, seeds, oracle):
        with pytest.raises(EmptyCandidates):
            evaluate([], seeds, oracle, n_sampled=5)

    def test_duplicates_rejected(self, seeds, oracle):
        with pytest.raises(EvaluationError):
            evaluate([_seq(1), _seq(1)], seeds, oracle, n_sampled=5)

    def test_more_candidates_than_draws(self, candidates, seeds, oracle):
        with pytest.raises(EvaluationError):
            evaluate(candidates, seeds, oracle, n_sampled=5)

    def test_workers_do_not_change_result(self, candidates, seeds, oracle):
        assert evaluate(candidates, seeds, oracle, 10, workers=4) == evaluate(candidates, seeds, oracle, 10)


class TestGenerationReport:
    """Tests for GenerationReport."""

    def test_published_scale_rates(self):
        report = GenerationReport(n_sampled=1_000_000, n_candidate=756_658, n_hit=14_894, n_new=9_685)
        assert format_rate(report.r_hit) == "1.97%"
        assert format_rate(report.r_gen) == "1.28%"

    @pytest.mark.parametrize("counts", [
        (10, 5, 6, 1),
        (10, 5, 3, 4),
        (4, 5, 1, 0),
        (10, 5, 3, -1),
    ])
    def test_ordering_enforced(self, counts):
        with pytest.raises(EvaluationError):
            GenerationReport(*counts)

    def test_key_values(self):
        report = GenerationReport(n_sampled=8, n_candidate=8, n_hit=2, n_new=1)
        assert report.key_values() == [
            "n_sampled=8", "n_candidate=8", "n_hit=2", "n_new=1", "r_hit=25.00%", "r_gen=12.50%",
        ]

    def test_table_is_aligned(self):
        rows = [
            ("manual", GenerationReport(1000, 900, 90, 45)),
            ("random", GenerationReport(1000, 1000, 0, 0)),
        ]
        lines = report_table(rows)
        assert lines[0].split() == ["Name", "N", "N_candidate", "N_hit", "N_new", "r_hit", "r_gen"]
        assert len({len(line) for line in lines}) == 1
        assert lines[1].split()[-2:] == ["10.00%", "5.00%"]


class TestFormatRate:
    """Tests for format_rate."""

    @pytest.mark.parametrize("rate,digits,expected", [
        (Fraction(1, 8), 2, "12.50%"),
        (Fraction(0), 2, "0.00%"),
        (Fraction(1, 3), 1, "33.3%"),
        (Fraction(1), 2, "100.00%"),
    ])
    def test_format(self, rate, digits, expected):
        assert format_rate(rate, digits) == expected
