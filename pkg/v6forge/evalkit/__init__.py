"""Candidate scoring, budget allocation and the synthetic benchmark universe."""

from .budget import allocate_budget, generate_with_budget, pilot_rates
from .oracle import ActivityOracle, SetOracle, oracle_from_file
from .report import GenerationReport, evaluate, format_rate, report_table
from .sweep import sampling_sweep
from .universe import UniverseConfig, prefix_pool, random_baseline, synth_universe

__all__ = [
    "ActivityOracle",
    "GenerationReport",
    "SetOracle",
    "UniverseConfig",
    "allocate_budget",
    "evaluate",
    "format_rate",
    "generate_with_budget",
    "oracle_from_file",
    "pilot_rates",
    "prefix_pool",
    "random_baseline",
    "report_table",
    "sampling_sweep",
    "synth_universe",
]
