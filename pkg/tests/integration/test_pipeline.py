"""Integration tests for the v6forge command line.

Each test runs main() end to end against files in a temporary
directory and checks the artifacts and exit codes.
"""

import json
from pathlib import Path

import pytest

from tests.conftest import make_blob_seeds
from v6forge.addr6 import load_seed_file, write_seed_file
from v6forge.cli.main import EXIT_CONFIG, EXIT_IO, EXIT_MODEL, EXIT_OK, main

FAST_TRAINING = ["--set", "epochs=1", "--set", "batch_size=64"]
BENCH_CONFIG = Path(__file__).resolve().parents[2] / "configs" / "bench.conf"


def _write_seeds(path, members):
    with path.open("w") as sink:
        write_seed_file(members, sink)
    return path


def _key_values(path):
    pairs = {}
    for line in path.read_text().splitlines():
        if "=" in line:
            key, value = line.split("=", 1)
            pairs[key.strip()] = value.strip()
    return pairs


@pytest.fixture
def universe_files(tmp_path, small_universe):
    """Seed file and scan result file drawn from the small synthetic universe."""
    _, seeds = small_universe
    seeds_path = _write_seeds(tmp_path / "seeds.txt", seeds)
    oracle_path = _write_seeds(tmp_path / "active.txt", seeds)
    return seeds_path, oracle_path


class TestClassify:
    """Tests for the classify command."""

    def test_manual_classification(self, tmp_path, universe_files):
        seeds_path, _ = universe_files
        out = tmp_path / "out"
        code = main(["classify", "--out", str(out), "--set", f"seeds={seeds_path}", "--set", "classification=manual"])

        assert code == EXIT_OK
        for name in ("fixed_iid", "low64_subnet", "slaac_eui64", "slaac_privacy", "other"):
            assert (out / f"{name}.txt").exists()
        pairs = _key_values(out / "classification.txt")
        assert int(pairs["total"]) == 200
        percents = [float(v) for k, v in pairs.items() if k.endswith(".percent")]
        assert sum(percents) == pytest.approx(100.0, abs=0.05)

        manifest = json.loads((out / "manifest.json").read_text())
        assert manifest["command"] == "classify"
        assert "classification.txt" in manifest["outputs"]

    def test_empty_seed_file(self, tmp_path):
        seeds_path = tmp_path / "empty.txt"
        seeds_path.write_text("# nothing here\n")
        out = tmp_path / "out"
        assert main(["classify", "--out", str(out), "--set", f"seeds={seeds_path}"]) == EXIT_OK

        for name in ("fixed_iid", "low64_subnet", "slaac_eui64", "slaac_privacy", "other"):
            assert (out / f"{name}.txt").read_text() == ""
        assert not (out / "all.txt").exists()
        pairs = _key_values(out / "classification.txt")
        assert pairs["total"] == "0"
        assert pairs["slaac_eui64.count"] == "0"

    def test_missing_seed_file(self, tmp_path):
        code = main(["classify", "--out", str(tmp_path), "--set", f"seeds={tmp_path / 'missing.txt'}"])
        assert code == EXIT_IO

    def test_missing_seeds_setting(self, tmp_path):
        out = tmp_path / "out"
        assert main(["classify", "--out", str(out)]) == EXIT_CONFIG
        assert not out.exists()

    def test_config_file(self, tmp_path, universe_files):
        seeds_path, _ = universe_files
        config = tmp_path / "run.conf"
        config.write_text(f"seeds = {seeds_path.name}\nclassification = manual\n")
        assert main(["classify", "--config", str(config), "--out", str(tmp_path / "out")]) == EXIT_OK
        assert (tmp_path / "out" / "slaac_eui64.txt").exists()


class TestCluster:
    """Tests for the cluster command."""

    @pytest.fixture
    def blob_file(self, tmp_path):
        return _write_seeds(tmp_path / "blobs.txt", make_blob_seeds())

    def test_three_blobs(self, tmp_path, blob_file):
        out = tmp_path / "out"
        assert main(["cluster", "--out", str(out), "--set", f"seeds={blob_file}"]) == EXIT_OK

        sizes = sorted(len(load_seed_file(out / f"cluster_{i}.txt")) for i in (1, 2, 3))
        assert sizes == [192, 192, 192]
        assert not (out / "cluster_4.txt").exists()
        assert _key_values(out / "sse_curve.txt")["chosen_k"] == "3"
        assert len((out / "assignments.csv").read_text().splitlines()) == 9
        centroids = (out / "centroids.csv").read_text().splitlines()
        assert len(centroids) == 3
        assert all(len(line.split(",")) == 24 for line in centroids)
        assert (out / "heatmap.png").read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"

    def test_single_cluster(self, tmp_path, blob_file):
        out = tmp_path / "out"
        code = main(["cluster", "--out", str(out), "--set", f"seeds={blob_file}", "--set", "cluster_k=1"])
        assert code == EXIT_OK
        assert len(load_seed_file(out / "cluster_1.txt")) == 576
        assert not (out / "sse_curve.txt").exists()

    def test_more_clusters_than_groups(self, tmp_path, blob_file):
        code = main(["cluster", "--out", str(tmp_path), "--set", f"seeds={blob_file}", "--set", "cluster_k=10"])
        assert code == EXIT_CONFIG


class TestTrainGenerateEvaluate:
    """Tests for train, generate and evaluate run in sequence."""

    def test_pipeline(self, tmp_path, universe_files):
        seeds_path, oracle_path = universe_files
        out = tmp_path / "out"
        common = ["--out", str(out), "--seed", "3", "--set", f"seeds={seeds_path}", "--set", "n=300"]

        assert main(["train", *common, *FAST_TRAINING]) == EXIT_OK
        assert (out / "models" / "all.v6gc").exists()
        assert len((out / "models" / "all.loss.log").read_text().splitlines()) == 1

        assert main(["generate", *common]) == EXIT_OK
        generation = _key_values(out / "generation.txt")
        assert generation["all.draws"] == "300"
        candidates = load_seed_file(out / "candidates.txt")
        assert 1 <= len(candidates) <= 300
        assert int(generation["n_candidate"]) == len(candidates)

        assert main(["evaluate", *common, "--set", f"oracle={oracle_path}"]) == EXIT_OK
        report = _key_values(out / "report.txt")
        assert int(report["candidates.n_candidate"]) == len(candidates)
        assert report["candidates.r_hit"].endswith("%")

    def test_generate_is_reproducible(self, tmp_path, universe_files):
        seeds_path, _ = universe_files
        out = tmp_path / "out"
        common = ["--out", str(out), "--set", f"seeds={seeds_path}", "--set", "n=200"]
        assert main(["train", *common, *FAST_TRAINING]) == EXIT_OK

        assert main(["generate", *common]) == EXIT_OK
        first = (out / "candidates.txt").read_bytes()
        assert main(["generate", *common]) == EXIT_OK
        assert (out / "candidates.txt").read_bytes() == first

    def test_corrupt_model(self, tmp_path):
        models = tmp_path / "models"
        models.mkdir()
        (models / "all.v6gc").write_bytes(b"V6GC not really a model")
        assert main(["generate", "--out", str(tmp_path)]) == EXIT_MODEL

    def test_no_models(self, tmp_path):
        assert main(["generate", "--out", str(tmp_path)]) == EXIT_IO


class TestEvaluateAtScale:
    """evaluate over a candidate file of three quarters of a million addresses."""

    N_CANDIDATE = 756_658
    N_HIT = 14_894
    N_SEED_HIT = 5_209

    @pytest.fixture
    def scored_files(self, tmp_path):
        candidates = [f"20010db8{i:024x}" for i in range(self.N_CANDIDATE)]
        # active candidates are the first N_HIT; the first N_SEED_HIT of them are also seeds
        seeds = candidates[: self.N_SEED_HIT] + [f"3fff0000{i:024x}" for i in range(100)]
        return (
            _write_seeds(tmp_path / "candidates.txt", candidates),
            _write_seeds(tmp_path / "seeds.txt", seeds),
            _write_seeds(tmp_path / "active.txt", candidates[: self.N_HIT]),
        )

    def test_rates_at_scale(self, tmp_path, scored_files):
        candidates_path, seeds_path, oracle_path = scored_files
        out = tmp_path / "out"
        code = main([
            "evaluate",
            "--out", str(out),
            "--set", f"candidates={candidates_path}",
            "--set", f"seeds={seeds_path}",
            "--set", f"oracle={oracle_path}",
            "--set", "n=1000000",
        ])
        assert code == EXIT_OK

        report = _key_values(out / "report.txt")
        assert report["candidates.n_candidate"] == "756658"
        assert report["candidates.n_hit"] == "14894"
        assert report["candidates.n_new"] == "9685"
        assert report["candidates.r_hit"] == "1.97%"
        assert report["candidates.r_gen"] == "1.28%"


UNIVERSE_SETTINGS = [
    "--set", "universe_fixed_iid=60",
    "--set", "universe_low64_subnet=60",
    "--set", "universe_eui64=60",
    "--set", "universe_privacy=60",
    "--set", "universe_sample=120",
    "--set", "n=200",
    "--set", "pilot_n=50",
]


class TestBench:
    """Tests for the bench command."""

    def test_arms(self, tmp_path):
        out = tmp_path / "out"
        code = main(["bench", "--out", str(out), *UNIVERSE_SETTINGS, *FAST_TRAINING, "--set", "bench_sweep=50,100"])
        assert code == EXIT_OK

        pairs = _key_values(out / "bench.txt")
        for arm in ("none", "manual", "random"):
            assert f"{arm}.r_gen" in pairs
        assert "cluster.r_gen" not in pairs
        assert len(load_seed_file(out / "seeds.txt")) == 120
        assert len((out / "sweep.txt").read_text().splitlines()) == 2

    def test_sample_larger_than_universe(self, tmp_path):
        out = tmp_path / "out"
        code = main(["bench", "--out", str(out), *UNIVERSE_SETTINGS, "--set", "universe_sample=1000"])
        assert code == EXIT_CONFIG
        assert not out.exists()

    def test_untrained_models_with_budget(self, tmp_path):
        out = tmp_path / "out"
        args = ["--set", "epochs=0", "--set", "budget_allocation=true"]
        assert main(["bench", "--out", str(out), *UNIVERSE_SETTINGS, *args]) == EXIT_OK

        outputs = json.loads((out / "manifest.json").read_text())["outputs"]
        assert {"seeds.txt", "bench.txt"} <= set(outputs)
        pairs = _key_values(out / "bench.txt")
        assert pairs["manual.n_sampled"] == "200"

    @pytest.mark.slow
    def test_rerun_is_identical(self, tmp_path):
        args = [*UNIVERSE_SETTINGS, "--set", "epochs=3", "--seed", "9"]
        assert main(["bench", "--out", str(tmp_path / "a"), *args]) == EXIT_OK
        assert main(["bench", "--out", str(tmp_path / "b"), *args]) == EXIT_OK

        for name in ("bench.txt", "seeds.txt", "manifest.json"):
            assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()

    @pytest.mark.slow
    def test_models_beat_random_baseline(self, tmp_path):
        """Full-size universe: 4 x 16384 hosts, 5,000 seeds, 50,000 draws."""
        out = tmp_path / "out"
        code = main([
            "bench",
            "--config", str(BENCH_CONFIG),
            "--out", str(out),
            "--set", "classification=manual",
            "--set", "n=50000",
            "--set", "pilot_n=5000",
            "--set", "bench_sweep=1000",
        ])
        assert code == EXIT_OK

        pairs = _key_values(out / "bench.txt")
        assert int(pairs["none.n_sampled"]) == int(pairs["random.n_sampled"]) == 50_000
        # same N in every arm, so r_gen compares as n_new
        assert int(pairs["none.n_new"]) >= 5 * int(pairs["random.n_new"])
        assert int(pairs["manual.n_new"]) >= int(pairs["none.n_new"])
