"""Unit tests for the sampling sweep."""

from tests.mocks import MockOracle
from v6forge.addr6 import SeedSet
from v6forge.evalkit import sampling_sweep


def _seq(i: int) -> str:
    return f"20010db8{i:024x}"


class TestSamplingSweep:
    """Tests for sampling_sweep."""

    def test_growing_n(self):
        oracle = MockOracle([_seq(i) for i in range(0, 1000, 3)])
        seeds = SeedSet.from_iterable([_seq(0)])
        requested = []

        def generate(n):
            requested.append(n)
            return [_seq(i) for i in range(n)]

        results = sampling_sweep(generate, [300, 30, 300, 3], seeds, oracle)
        assert requested == [3, 30, 300]
        assert [n for n, _ in results] == [3, 30, 300]
        news = [report.n_new for _, report in results]
        assert news == [0, 9, 99]
        assert news == sorted(news)
