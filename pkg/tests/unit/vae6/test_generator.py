"""Unit tests for candidate generation."""

import pytest

from v6forge.addr6 import is_nybble_seq
from v6forge.vae6 import VaeParams, VaeShape, generate

SMALL = VaeShape(channels=4, latent=4)


@pytest.fixture(scope="module")
def params():
    return VaeParams.init(SMALL, rng_seed=21)


class TestGenerate:
    """Tests for generate."""

    def test_single_draw(self, params):
        candidates = generate(params, 1)
        assert len(candidates) == 1
        assert is_nybble_seq(candidates[0])

    @pytest.mark.parametrize("sampling", ["argmax", "sample"])
    def test_candidates_are_unique_and_valid(self, params, sampling):
        candidates = generate(params, 1000, rng_seed=3, sampling=sampling, chunk=256)
        assert 1 <= len(candidates) <= 1000
        assert len(set(candidates)) == len(candidates)
        assert all(is_nybble_seq(seq) for seq in candidates)

    def test_sampling_spreads_more_than_argmax(self, params):
        argmax = generate(params, 500, rng_seed=3)
        sampled = generate(params, 500, rng_seed=3, sampling="sample")
        assert len(sampled) >= len(argmax)

    def test_deterministic(self, params):
        assert generate(params, 300, rng_seed=9) == generate(params, 300, rng_seed=9)

    def test_chunking_does_not_change_result(self, params):
        assert generate(params, 300, rng_seed=9, chunk=64) == generate(params, 300, rng_seed=9)

    def test_zero_draws(self, params):
        with pytest.raises(ValueError):
            generate(params, 0)

    def test_unknown_sampling(self, params):
        with pytest.raises(ValueError):
            generate(params, 1, sampling="beam")
