"""User surface: file format, runs, experiments and invariant sweeps."""

from .io import GraphFormatError, format_graph, parse_graph_file, parse_graph_text, write_graph_file
from .report import RunReport
from .runner import (
    ExperimentConfig,
    ExperimentResult,
    IncompatibleClass,
    TrialError,
    experiment,
    render_table,
    run,
)
from .sweep import SweepSummary, check_trial, sweep, sweep_instance
from .verify import VerifySummary, verify

__all__ = [
    "VerifySummary",
    "verify",
    "ExperimentConfig",
    "ExperimentResult",
    "GraphFormatError",
    "IncompatibleClass",
    "RunReport",
    "SweepSummary",
    "TrialError",
    "check_trial",
    "experiment",
    "format_graph",
    "parse_graph_file",
    "parse_graph_text",
    "render_table",
    "run",
    "sweep",
    "sweep_instance",
    "write_graph_file",
]
