"""Shared pytest fixtures."""

import os
from typing import List

import numpy as np
import pytest

from v6forge.addr6 import ALPHABET, SeedSet
from v6forge.evalkit import UniverseConfig, synth_universe

SAMPLE_TEXT = "2001:db8:20:3::301"
SAMPLE_NYBBLES = "20010db8002000030000000000000301"

BLOB_PREFIXES = [f"2{i:07x}" for i in range(1, 10)]


def _random_nybbles(rng: np.random.Generator, count: int) -> str:
    return "".join(ALPHABET[v] for v in rng.integers(0, 16, size=count))


def make_blob_seeds(per_group: int = 64, rng_seed: int = 3) -> SeedSet:
    """Nine /32 groups whose fingerprints fall into three separated blobs.

    Groups 1-3 vary only nybbles 29-32, groups 4-6 the whole IID and
    groups 7-9 only the subnet (nybbles 9-16).
    """
    rng = np.random.default_rng(rng_seed)
    members: List[str] = []
    for index, prefix in enumerate(BLOB_PREFIXES):
        blob = index // 3
        for _ in range(per_group):
            if blob == 0:
                seq = prefix + "00000001" + "000000000000" + _random_nybbles(rng, 4)
            elif blob == 1:
                seq = prefix + "00000002" + _random_nybbles(rng, 16)
            else:
                seq = prefix + _random_nybbles(rng, 8) + "0000000000000001"
            members.append(seq)
    return SeedSet.from_iterable(members, source_label="blobs")


@pytest.fixture
def sample_nybbles() -> str:
    """The 2001:db8:20:3::301 example as nybbles."""
    return SAMPLE_NYBBLES


@pytest.fixture
def blob_seeds() -> SeedSet:
    return make_blob_seeds()


@pytest.fixture(scope="session")
def small_universe():
    """(oracle, seeds) of a 400-host universe with 200 seeds."""
    cfg = UniverseConfig(
        rng_seed=11,
        fixed_iid=100,
        low64_subnet=100,
        eui64=100,
        privacy=100,
        sample=200,
    )
    return synth_universe(cfg)


def pytest_collection_modifyitems(config, items):
    if os.environ.get("V6FORGE_SLOW") == "1":
        return
    skip_slow = pytest.mark.skip(reason="set V6FORGE_SLOW=1 to run slow benchmarks")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)
