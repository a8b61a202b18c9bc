"""Experiment harness: configuration, deterministic parallel runs and reports."""

from .config import DEFAULT_SEED, EXPERIMENTS, ExperimentConfig, build_config, read_config_file
from .report import SummaryReport
from .runner import (run, run_cycle_events, run_det_square, run_disc_stats, run_distribution_audit,
                     run_experiment, run_irreducibility_rate, run_small_divisor_rate,
                     run_table1_scan, run_tv_distance)

__all__ = [
    "DEFAULT_SEED", "EXPERIMENTS", "ExperimentConfig", "SummaryReport", "build_config",
    "read_config_file", "run", "run_experiment", "run_irreducibility_rate", "run_tv_distance",
    "run_distribution_audit", "run_disc_stats", "run_table1_scan", "run_det_square",
    "run_cycle_events", "run_small_divisor_rate",
]
