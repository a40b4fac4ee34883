from .config import ConfigError, ExperimentConfig, mix, parse_grid
from .experiments import (
    AuditRow,
    CoreRow,
    InsertBenchRow,
    ScanRow,
    insert_steps,
    run,
    run_audit,
    run_core,
    run_insert_bench,
    run_scan,
    run_thresholds,
)
from .output import render, to_csv, to_json

__all__ = [
    "AuditRow",
    "ConfigError",
    "CoreRow",
    "ExperimentConfig",
    "InsertBenchRow",
    "ScanRow",
    "insert_steps",
    "mix",
    "parse_grid",
    "render",
    "run",
    "run_audit",
    "run_core",
    "run_insert_bench",
    "run_scan",
    "run_thresholds",
    "to_csv",
    "to_json",
]
