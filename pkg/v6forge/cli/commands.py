"""Pipeline stages behind the v6forge subcommands.

Every command reads a PipelineConfig, writes its artifacts under an
output directory and finishes with manifest.json.
"""

from dataclasses import replace
from io import BytesIO
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from loguru import logger

from .. import __version__
from ..addr6 import NybbleSeq, SeedSet, load_seed_file, write_seed_file
from ..evalkit import (
    ActivityOracle,
    GenerationReport,
    allocate_budget,
    evaluate,
    format_rate,
    generate_with_budget,
    oracle_from_file,
    prefix_pool,
    random_baseline,
    report_table,
    sampling_sweep,
    synth_universe,
)
from ..exceptions import ConfigError, EmptySeedSet
from ..factory import get_classifier
from ..seedclass import (
    EntropyClusterClassifier,
    classification_key_values,
    classification_report,
    render_heatmap,
)
from ..seedclass.classifiers import ALL_CATEGORY
from ..seedclass.report import assignment_lines, centroid_lines
from ..vae6 import VaeParams, format_history, generate, read_model_file, save_params, train
from .config import PipelineConfig
from .manifest import RunManifest, derive_seed

MODEL_SUFFIX = ".v6gc"


def _lines(lines: Sequence[str]) -> str:
    return "".join(f"{line}\n" for line in lines)


def _seed_file_bytes(members) -> bytes:
    with BytesIO() as buffer:
        write_seed_file(members, buffer)
        return buffer.getvalue()


def _require(config: PipelineConfig, key: str) -> Path:
    value = getattr(config, key)
    if value is None:
        raise ConfigError(f"{key} is required for this command", key)
    return value


def load_seeds(config: PipelineConfig) -> SeedSet:
    return load_seed_file(_require(config, "seeds"), workers=config.workers)


def load_oracle(config: PipelineConfig) -> ActivityOracle:
    return oracle_from_file(_require(config, "oracle"), workers=config.workers)


def model_dir(config: PipelineConfig, out: Path) -> Path:
    return config.model_dir if config.model_dir is not None else out / "models"


def make_classifier(config: PipelineConfig, mode: Optional[str] = None):
    mode = mode or config.classification
    if mode == "cluster":
        return EntropyClusterClassifier(
            k=config.cluster.k,
            k_max=config.cluster.k_max,
            prefix_nybbles=config.cluster.prefix_nybbles,
            min_group=config.cluster.min_group,
            rng_seed=derive_seed(config.rng_seed, "cluster"),
            workers=config.workers,
        )
    return get_classifier(mode, workers=config.workers)


def _report_text(partition: Dict[str, SeedSet]) -> str:
    return _lines(classification_report(partition) + [""] + classification_key_values(partition))


def _write_partition(manifest: RunManifest, partition: Dict[str, SeedSet]) -> None:
    for category, members in partition.items():
        manifest.write(f"{category}.txt", _seed_file_bytes(members))
    manifest.write("classification.txt", _report_text(partition))


def cmd_classify(config: PipelineConfig, manifest: RunManifest) -> None:
    """Per-category seed files and a count/percentage report."""
    with manifest.stage("load"):
        seeds = load_seeds(config)
    with manifest.stage("classify"):
        # the unclassified mode still reports per scheme
        mode = "manual" if config.classification == "none" else None
        partition = make_classifier(config, mode).classify(seeds)
    for line in classification_report(partition):
        logger.info(line)
    _write_partition(manifest, partition)


def cmd_cluster(config: PipelineConfig, manifest: RunManifest) -> None:
    """Cluster files, SSE curve, centroids, group assignments and a heatmap."""
    with manifest.stage("load"):
        seeds = load_seeds(config)
    with manifest.stage("cluster"):
        result = make_classifier(config, "cluster").cluster(seeds)

    _write_partition(manifest, result.partition)
    if result.elbow is not None:
        curve = [f"{k} {sse:.6f}" for k, sse in enumerate(result.elbow.sse_curve, start=1)]
        manifest.write("sse_curve.txt", _lines(curve + [f"chosen_k={result.elbow.chosen_k}"]))
    if result.model is not None:
        manifest.write("centroids.csv", _lines(centroid_lines(result.model.centroids)))
        prefixes = [fp.prefix for fp in result.fingerprints]
        manifest.write("assignments.csv", _lines(assignment_lines(prefixes, result.model.assignments)))
        manifest.write("heatmap.png", render_heatmap(result.model.centroids))
        logger.info(f"{result.model.k} clusters over {len(prefixes)} prefix groups")


def _train_partition(
    config: PipelineConfig, partition: Dict[str, SeedSet], stage: str
) -> Dict[str, Tuple[VaeParams, list]]:
    models = {}
    for category, members in partition.items():
        if len(members) == 0:
            logger.warning(f"Skipping empty category {category}")
            continue
        cfg = replace(config.train, rng_seed=derive_seed(config.rng_seed, stage, category))
        models[category] = train(members, cfg)
    if not models:
        raise EmptySeedSet("No category has seeds to train on")
    return models


def cmd_train(config: PipelineConfig, manifest: RunManifest) -> None:
    """One model and loss log per non-empty seed category."""
    with manifest.stage("load"):
        seeds = load_seeds(config)
    with manifest.stage("classify"):
        partition = make_classifier(config).classify(seeds)
    with manifest.stage("train"):
        models = _train_partition(config, partition, "train")

    directory = model_dir(config, manifest.out_dir)
    for category, (params, history) in models.items():
        manifest.write(directory / f"{category}{MODEL_SUFFIX}", save_params(params))
        manifest.write(directory / f"{category}.loss.log", format_history(history))


def _generator(config: PipelineConfig, models: Dict[str, VaeParams], stage: str) -> Callable:
    def generate_fn(category: str, draws: int) -> List[NybbleSeq]:
        seed = derive_seed(config.rng_seed, stage, category)
        return generate(models[category], draws, seed, config.sampling)

    return generate_fn


def _spend(
    config: PipelineConfig,
    models: Dict[str, VaeParams],
    stage: str,
    partition: Optional[Dict[str, SeedSet]] = None,
    oracle: Optional[ActivityOracle] = None,
) -> Tuple[List[NybbleSeq], List[Tuple[str, int]]]:
    """Candidates for n draws, split evenly or by pilot r_gen."""
    generate_fn = _generator(config, models, stage)
    if config.budget_allocation and len(models) > 1:
        categories = {name: partition[name] for name in models}
        return generate_with_budget(categories, generate_fn, oracle, config.n, config.pilot_n)

    allocation = allocate_budget([(name, 1) for name in models], config.n)
    merged = {}
    for name, draws in allocation:
        if draws:
            merged.update(dict.fromkeys(generate_fn(name, draws)))
    return list(merged), allocation


def load_models(directory: Path) -> Dict[str, VaeParams]:
    """Every model file in a directory, by category name."""
    paths = sorted(directory.glob(f"*{MODEL_SUFFIX}"))
    if not paths:
        raise FileNotFoundError(f"No {MODEL_SUFFIX} models in {directory}")
    return {path.name[: -len(MODEL_SUFFIX)]: read_model_file(path) for path in paths}


def cmd_generate(config: PipelineConfig, manifest: RunManifest) -> None:
    """Candidate file from the trained models."""
    models = load_models(model_dir(config, manifest.out_dir))
    seeds = load_seeds(config) if config.seeds is not None else None

    partition, oracle = None, None
    if config.budget_allocation and len(models) > 1:
        if seeds is None:
            raise ConfigError("budget_allocation needs seeds", "seeds")
        oracle = load_oracle(config)
        partition = make_classifier(config).classify(seeds)
        missing = set(models) - set(partition)
        if missing:
            raise ConfigError(f"models without a seed category: {', '.join(sorted(missing))}")

    with manifest.stage("generate"):
        candidates, allocation = _spend(config, models, "generate", partition, oracle)
    if config.exclude_seeds and seeds is not None:
        candidates = [seq for seq in candidates if seq not in seeds]

    manifest.write("candidates.txt", _seed_file_bytes(candidates))
    summary = [f"{name}.draws={draws}" for name, draws in allocation]
    summary += [f"n_sampled={config.n}", f"n_candidate={len(candidates)}"]
    manifest.write("generation.txt", _lines(summary))
    logger.info(f"{len(candidates)} candidates from {config.n} draws")


def _report_lines(rows: List[Tuple[str, GenerationReport]]) -> List[str]:
    lines = report_table(rows)
    for name, report in rows:
        lines.append("")
        lines.extend(f"{name}.{kv}" for kv in report.key_values())
    return lines


def cmd_evaluate(config: PipelineConfig, manifest: RunManifest) -> None:
    """GenerationReport of a candidate file against an oracle."""
    path = config.candidates if config.candidates is not None else manifest.out_dir / "candidates.txt"
    candidates = load_seed_file(path, workers=config.workers)
    seeds = load_seeds(config)
    oracle = load_oracle(config)
    with manifest.stage("evaluate"):
        report = evaluate(
            list(candidates.members),
            seeds,
            oracle,
            config.n,
            exclude_seeds=config.exclude_seeds,
            workers=config.workers,
        )
    manifest.write("report.txt", _lines(_report_lines([("candidates", report)])))
    logger.info(f"r_hit={format_rate(report.r_hit)} r_gen={format_rate(report.r_gen)}")


def _bench_arm(
    config: PipelineConfig,
    mode: str,
    seeds: SeedSet,
    oracle: ActivityOracle,
) -> Tuple[GenerationReport, Dict[str, VaeParams]]:
    partition = make_classifier(config, mode).classify(seeds)
    trained = _train_partition(config, partition, f"bench-train-{mode}")
    models = {name: params for name, (params, _) in trained.items()}
    candidates, allocation = _spend(config, models, f"bench-generate-{mode}", partition, oracle)
    logger.info(f"Bench {mode}: " + ", ".join(f"{name}={draws}" for name, draws in allocation))
    report = evaluate(candidates, seeds, oracle, config.n, exclude_seeds=config.exclude_seeds)
    return report, models


def cmd_bench(config: PipelineConfig, manifest: RunManifest) -> None:
    """Synthetic-universe comparison of the model arms and a random baseline."""
    universe_cfg = replace(config.universe, rng_seed=derive_seed(config.rng_seed, "universe"))
    with manifest.stage("universe"):
        oracle, seeds = synth_universe(universe_cfg)

    modes = ["none", "manual"]
    if config.classification == "cluster":
        modes.append("cluster")

    rows = []
    unclassified = None
    for mode in modes:
        with manifest.stage(f"arm-{mode}"):
            report, models = _bench_arm(config, mode, seeds, oracle)
        rows.append((mode, report))
        if mode == "none":
            unclassified = models

    with manifest.stage("arm-random"):
        baseline = random_baseline(config.n, prefix_pool(seeds), derive_seed(config.rng_seed, "baseline"))
        rows.append(("random", evaluate(baseline, seeds, oracle, config.n, exclude_seeds=config.exclude_seeds)))

    for line in report_table(rows):
        logger.info(line)

    # nothing is written until every arm and the sweep have finished
    artifacts = {"seeds.txt": _seed_file_bytes(seeds), "bench.txt": _lines(_report_lines(rows))}
    if config.bench_sweep:
        generate_fn = _generator(config, unclassified, "bench-sweep")
        with manifest.stage("sweep"):
            sweep = sampling_sweep(
                lambda n: generate_fn(ALL_CATEGORY, n), config.bench_sweep, seeds, oracle, config.exclude_seeds
            )
        sweep_lines = [
            f"N={n} n_candidate={r.n_candidate} n_hit={r.n_hit} n_new={r.n_new} r_gen={format_rate(r.r_gen)}"
            for n, r in sweep
        ]
        artifacts["sweep.txt"] = _lines(sweep_lines)

    for name, data in artifacts.items():
        manifest.write(name, data)


COMMANDS: Dict[str, Callable[[PipelineConfig, RunManifest], None]] = {
    "classify": cmd_classify,
    "cluster": cmd_cluster,
    "train": cmd_train,
    "generate": cmd_generate,
    "evaluate": cmd_evaluate,
    "bench": cmd_bench,
}


def run_command(name: str, config: PipelineConfig, out: Path) -> RunManifest:
    """Run one command and save its manifest."""
    out = out.resolve()
    manifest = RunManifest(command=name, version=__version__, config=config.snapshot(), out_dir=out)
    COMMANDS[name](config, manifest)
    manifest.save()
    return manifest
