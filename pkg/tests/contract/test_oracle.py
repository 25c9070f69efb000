"""Contract tests for ActivityOracle implementations."""

import pytest

from tests.mocks import MockOracle
from v6forge.addr6 import from_nybbles
from v6forge.evalkit import ActivityOracle, SetOracle

ACTIVE = ["20010db8000000000000000000000001", "20010db8000000000000000000000002"]
INACTIVE = "20010db8000000000000000000000003"


class OracleContractTests:
    """Base contract tests that all oracles must pass.

    The oracle fixture must report exactly ACTIVE as active.
    """

    @pytest.fixture
    def oracle(self) -> ActivityOracle:
        """Return an oracle instance to test."""
        raise NotImplementedError("Subclass must provide oracle fixture")

    def test_active_members(self, oracle):
        assert all(oracle.is_active(seq) for seq in ACTIVE)

    def test_inactive(self, oracle):
        assert not oracle.is_active(INACTIVE)

    def test_accepts_addresses(self, oracle):
        assert oracle.is_active(from_nybbles(ACTIVE[0]))
        assert from_nybbles(ACTIVE[1]) in oracle

    def test_answers_are_stable(self, oracle):
        first = [oracle.is_active(seq) for seq in ACTIVE + [INACTIVE]]
        second = [oracle.is_active(seq) for seq in ACTIVE + [INACTIVE]]
        assert first == second == [True, True, False]

    def test_contains_rejects_other_types(self, oracle):
        assert 42 not in oracle

    def test_size_and_descriptor(self, oracle):
        assert oracle.size in (None, len(ACTIVE))
        assert oracle.descriptor
        assert oracle.descriptor in repr(oracle)


class TestSetOracleContract(OracleContractTests):
    """Contract tests for SetOracle."""

    @pytest.fixture
    def oracle(self) -> ActivityOracle:
        return SetOracle(ACTIVE, descriptor="two hosts")


class TestMockOracleContract(OracleContractTests):
    """Contract tests for the test double, so other tests can trust it."""

    @pytest.fixture
    def oracle(self) -> ActivityOracle:
        return MockOracle(ACTIVE)
