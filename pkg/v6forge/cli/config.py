"""Pipeline configuration files.

A config file holds ``key = value`` lines. Blank lines and lines
starting with ``#`` are ignored. ``include = other.conf`` merges another
file (relative to the including file) at that point; later keys
override earlier ones. Path values are relative to the file that sets
them.
"""

from dataclasses import asdict, dataclass, field, replace
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple, Union

from ..exceptions import ConfigError
from ..evalkit import UniverseConfig
from ..seedclass import CLASSIFIER_REGISTRY
from ..seedclass.classifiers.entropy_cluster import DEFAULT_K_MAX, DEFAULT_MIN_GROUP
from ..seedclass.grouping import DEFAULT_PREFIX_NYBBLES
from ..vae6 import LOSS_KINDS, SAMPLING_MODES, TrainConfig

INCLUDE_KEY = "include"
_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


@dataclass(frozen=True)
class ClusterSettings:
    """Entropy clustering options."""

    k: Optional[int] = None
    """Fixed cluster count; None picks k with the elbow method."""

    k_max: int = DEFAULT_K_MAX
    prefix_nybbles: int = DEFAULT_PREFIX_NYBBLES
    min_group: int = DEFAULT_MIN_GROUP


@dataclass(frozen=True)
class PipelineConfig:
    """Everything the commands need, after parsing and validation."""

    seeds: Optional[Path] = None
    """Seed address file."""

    model_dir: Optional[Path] = None
    """Where train writes and generate reads models; defaults to <out>/models."""

    candidates: Optional[Path] = None
    """Candidate file for evaluate; defaults to <out>/candidates.txt."""

    oracle: Optional[Path] = None
    """Scan result file of active addresses."""

    classification: str = "none"
    """Seed classification mode: none, manual or cluster."""

    cluster: ClusterSettings = field(default_factory=ClusterSettings)
    train: TrainConfig = field(default_factory=TrainConfig)

    n: int = 10_000
    """Sampling count N."""

    pilot_n: int = 1_000
    """Draws per category when estimating r_gen for budget allocation."""

    budget_allocation: bool = False
    exclude_seeds: bool = False
    sampling: str = "argmax"
    rng_seed: int = 0
    workers: int = 1
    universe: UniverseConfig = field(default_factory=UniverseConfig)
    bench_sweep: Tuple[int, ...] = ()

    def snapshot(self) -> Dict[str, object]:
        """JSON-ready view of every setting."""

        def plain(value):
            if isinstance(value, Path):
                return str(value)
            if isinstance(value, dict):
                return {k: plain(v) for k, v in value.items()}
            if isinstance(value, (list, tuple)):
                return [plain(v) for v in value]
            return value

        return plain(asdict(self))


def _int(key: str, text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ConfigError(f"{key} must be an integer, got {text!r}", key) from None


def _float(key: str, text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise ConfigError(f"{key} must be a number, got {text!r}", key) from None


def _bool(key: str, text: str) -> bool:
    lowered = text.lower()
    if lowered in _TRUE:
        return True
    if lowered in _FALSE:
        return False
    raise ConfigError(f"{key} must be true or false, got {text!r}", key)


def _choice(options) -> Callable[[str, str], str]:
    def parse(key: str, text: str) -> str:
        if text not in options:
            raise ConfigError(f"{key} must be one of {', '.join(options)}, got {text!r}", key)
        return text

    return parse


def _optional_int(none_word: str) -> Callable[[str, str], Optional[int]]:
    def parse(key: str, text: str) -> Optional[int]:
        return None if text.lower() == none_word else _int(key, text)

    return parse


def _int_list(key: str, text: str) -> Tuple[int, ...]:
    return tuple(_int(key, part.strip()) for part in text.split(",") if part.strip())


def _path(key: str, text: str) -> str:
    if not text:
        raise ConfigError(f"{key} needs a path", key)
    return text


PATH_KEYS = ("seeds", "model_dir", "candidates", "oracle")

PARSERS: Dict[str, Callable[[str, str], object]] = {
    "seeds": _path,
    "model_dir": _path,
    "candidates": _path,
    "oracle": _path,
    "classification": _choice(tuple(CLASSIFIER_REGISTRY)),
    "cluster_k": _optional_int("auto"),
    "cluster_k_max": _int,
    "cluster_prefix_nybbles": _int,
    "cluster_min_group": _int,
    "batch_size": _int,
    "epochs": _int,
    "learning_rate": _float,
    "patience": _optional_int("off"),
    "loss": _choice(LOSS_KINDS),
    "n": _int,
    "pilot_n": _int,
    "budget_allocation": _bool,
    "exclude_seeds": _bool,
    "sampling": _choice(SAMPLING_MODES),
    "rng_seed": _int,
    "workers": _int,
    "universe_prefixes": _int,
    "universe_subnets": _int,
    "universe_fixed_iid": _int,
    "universe_low64_subnet": _int,
    "universe_eui64": _int,
    "universe_privacy": _int,
    "universe_sample": _int,
    "bench_sweep": _int_list,
}


def split_line(line: str, where: str) -> Optional[Tuple[str, str]]:
    """(key, value) of a config line, or None for blanks and comments."""
    stripped = line.strip()
    if not stripped or stripped.startswith("#"):
        return None
    if "=" not in stripped:
        raise ConfigError(f"{where}: expected key = value, got {stripped!r}")
    key, value = stripped.split("=", 1)
    return key.strip(), value.strip()


def read_config_file(
    path: Union[str, Path], _stack: Tuple[Path, ...] = ()
) -> Dict[str, Tuple[str, Path]]:
    """Raw settings of a config file and its includes.

    Returns:
        key -> (value text, directory of the file that set it).

    Raises:
        ConfigError: On syntax errors, unknown keys or include cycles.
        OSError: If a file cannot be read.
    """
    path = Path(path).resolve()
    if path in _stack:
        chain = " -> ".join(str(p) for p in _stack + (path,))
        raise ConfigError(f"include cycle: {chain}", INCLUDE_KEY)

    settings: Dict[str, Tuple[str, Path]] = {}
    for number, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        pair = split_line(line, f"{path}:{number}")
        if pair is None:
            continue
        key, value = pair
        if key == INCLUDE_KEY:
            settings.update(read_config_file(path.parent / value, _stack + (path,)))
        elif key in PARSERS:
            settings[key] = (value, path.parent)
        else:
            raise ConfigError(f"{path}:{number}: unknown key {key!r}", key)
    return settings


def parse_overrides(pairs: List[str], base_dir: Path) -> Dict[str, Tuple[str, Path]]:
    """--set KEY=VALUE arguments, paths relative to base_dir."""
    settings = {}
    for pair in pairs:
        parsed = split_line(pair, "--set")
        if parsed is None:
            continue
        key, value = parsed
        if key not in PARSERS:
            raise ConfigError(f"--set: unknown key {key!r}", key)
        settings[key] = (value, base_dir)
    return settings


def build_config(raw: Dict[str, Tuple[str, Path]]) -> PipelineConfig:
    """Parse and validate raw settings.

    Raises:
        ConfigError: On bad values.
    """
    values: Dict[str, object] = {}
    for key, (text, origin) in raw.items():
        value = PARSERS[key](key, text)
        if key in PATH_KEYS:
            value = (origin / value) if not Path(value).is_absolute() else Path(value)
        values[key] = value

    def take(key, default):
        return values.get(key, default)

    defaults = PipelineConfig()
    try:
        cluster = ClusterSettings(
            k=take("cluster_k", defaults.cluster.k),
            k_max=take("cluster_k_max", defaults.cluster.k_max),
            prefix_nybbles=take("cluster_prefix_nybbles", defaults.cluster.prefix_nybbles),
            min_group=take("cluster_min_group", defaults.cluster.min_group),
        )
        train = TrainConfig(
            batch_size=take("batch_size", defaults.train.batch_size),
            epochs=take("epochs", defaults.train.epochs),
            learning_rate=take("learning_rate", defaults.train.learning_rate),
            patience=take("patience", defaults.train.patience),
            loss=take("loss", defaults.train.loss),
        )
        universe = UniverseConfig(
            prefixes=take("universe_prefixes", defaults.universe.prefixes),
            subnets=take("universe_subnets", defaults.universe.subnets),
            fixed_iid=take("universe_fixed_iid", defaults.universe.fixed_iid),
            low64_subnet=take("universe_low64_subnet", defaults.universe.low64_subnet),
            eui64=take("universe_eui64", defaults.universe.eui64),
            privacy=take("universe_privacy", defaults.universe.privacy),
            sample=take("universe_sample", defaults.universe.sample),
        )
    except ValueError as e:
        raise ConfigError(str(e)) from e

    config = PipelineConfig(
        seeds=take("seeds", None),
        model_dir=take("model_dir", None),
        candidates=take("candidates", None),
        oracle=take("oracle", None),
        classification=take("classification", defaults.classification),
        cluster=cluster,
        train=train,
        n=take("n", defaults.n),
        pilot_n=take("pilot_n", defaults.pilot_n),
        budget_allocation=take("budget_allocation", defaults.budget_allocation),
        exclude_seeds=take("exclude_seeds", defaults.exclude_seeds),
        sampling=take("sampling", defaults.sampling),
        rng_seed=take("rng_seed", defaults.rng_seed),
        workers=take("workers", defaults.workers),
        universe=universe,
        bench_sweep=take("bench_sweep", defaults.bench_sweep),
    )
    validate(config)
    return config


def validate(config: PipelineConfig) -> None:
    """Range checks the dataclasses do not make themselves."""
    checks = [
        ("n", config.n >= 1),
        ("pilot_n", config.pilot_n >= 1),
        ("workers", config.workers >= 1),
        ("cluster_k", config.cluster.k is None or config.cluster.k >= 1),
        ("cluster_k_max", config.cluster.k_max >= 2),
        ("cluster_prefix_nybbles", 1 <= config.cluster.prefix_nybbles < 32),
        ("cluster_min_group", config.cluster.min_group >= 1),
        ("bench_sweep", all(n >= 1 for n in config.bench_sweep)),
    ]
    for key, ok in checks:
        if not ok:
            raise ConfigError(f"{key} is out of range", key)


def load_config(
    path: Optional[Union[str, Path]] = None,
    overrides: Optional[List[str]] = None,
    rng_seed: Optional[int] = None,
) -> PipelineConfig:
    """Read a config file (optional), apply --set overrides and --seed."""
    raw: Dict[str, Tuple[str, Path]] = {}
    if path is not None:
        raw.update(read_config_file(path))
    raw.update(parse_overrides(overrides or [], Path.cwd()))
    config = build_config(raw)
    if rng_seed is not None:
        config = replace(config, rng_seed=rng_seed)
    return config
