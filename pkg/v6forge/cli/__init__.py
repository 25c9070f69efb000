"""Command-line orchestration of the v6forge pipeline."""

from .commands import COMMANDS, run_command
from .config import ClusterSettings, PipelineConfig, load_config
from .manifest import RunManifest, derive_seed, write_atomic

__all__ = [
    "COMMANDS",
    "ClusterSettings",
    "PipelineConfig",
    "RunManifest",
    "derive_seed",
    "load_config",
    "run_command",
    "write_atomic",
]
