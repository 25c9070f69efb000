"""Unit tests for VAE training."""

import numpy as np
import pytest

from v6forge.addr6 import SeedSet
from v6forge.exceptions import EmptySeedSet
from v6forge.vae6 import (
    LossBreakdown,
    TrainConfig,
    VaeParams,
    VaeShape,
    format_history,
    generate,
    train,
)

SMALL = VaeShape(channels=4, latent=4)


class TestTrainConfig:
    """Tests for TrainConfig validation."""

    @pytest.mark.parametrize("kwargs", [
        {"batch_size": 0},
        {"epochs": -1},
        {"learning_rate": 0.0},
        {"patience": 0},
        {"loss": "mse"},
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(ValueError):
            TrainConfig(**kwargs)


class TestTrain:
    """Tests for train."""

    def test_empty_seed_set(self):
        with pytest.raises(EmptySeedSet):
            train(SeedSet())

    def test_zero_epochs_returns_initial_params(self, blob_seeds):
        params, history = train(blob_seeds, TrainConfig(epochs=0, rng_seed=5), SMALL)
        assert history == []
        assert params == VaeParams.init(SMALL, rng_seed=5)

    def test_deterministic(self, blob_seeds):
        seeds = blob_seeds.subset(list(blob_seeds)[:40])
        cfg = TrainConfig(epochs=2, batch_size=16, rng_seed=7)
        first, first_history = train(seeds, cfg, SMALL)
        second, second_history = train(seeds, cfg, SMALL)
        assert first == second
        assert first_history == second_history
        assert len(first_history) == 2

    def test_patience_stops_early(self, sample_nybbles):
        seeds = SeedSet.from_iterable([sample_nybbles])
        cfg = TrainConfig(epochs=50, batch_size=1, learning_rate=1e-9, patience=1)
        _, history = train(seeds, cfg, SMALL)
        assert len(history) < 50

    def test_overfits_single_seed(self, sample_nybbles):
        """One seed, many steps: the decoder learns to emit it."""
        seeds = SeedSet.from_iterable([sample_nybbles])
        cfg = TrainConfig(epochs=400, batch_size=1, learning_rate=1e-2, rng_seed=1)
        params, history = train(seeds, cfg, SMALL)

        assert history[-1].j_xent < 0.25 * history[0].j_xent
        assert generate(params, 20, rng_seed=2) == [sample_nybbles]

    def test_categorical_loss_trains(self, blob_seeds):
        seeds = blob_seeds.subset(list(blob_seeds)[:8])
        _, history = train(seeds, TrainConfig(epochs=1, loss="categorical"), SMALL)
        assert len(history) == 1
        assert np.isfinite(history[0].j_vae)


class TestFormatHistory:
    """Tests for format_history."""

    def test_one_line_per_epoch(self):
        text = format_history([LossBreakdown(2.0, 0.5), LossBreakdown(1.0, 0.25)])
        assert text.splitlines() == [
            "1 2.000000 0.500000 2.500000",
            "2 1.000000 0.250000 1.250000",
        ]
