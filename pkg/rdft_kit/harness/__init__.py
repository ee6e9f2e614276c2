"""Experiment harness: scenarios, signal generation and drivers."""

from .experiments import (
    DetectionResult,
    ErrorReport,
    MethodErrors,
    output_name,
    response_grid,
    run_detection,
    run_impulse_dump,
    run_response_dump,
    run_table1,
    weak_tone_bins,
    write_detection_report,
    write_error_report,
    write_impulse_dump,
    write_response_dump,
)
from .scenario import NoiseKind, Scenario, ScenarioKind, add_noise, gen_signal, signal_phases

__all__ = [
    "DetectionResult",
    "ErrorReport",
    "MethodErrors",
    "NoiseKind",
    "Scenario",
    "ScenarioKind",
    "add_noise",
    "gen_signal",
    "output_name",
    "response_grid",
    "run_detection",
    "run_impulse_dump",
    "run_response_dump",
    "run_table1",
    "signal_phases",
    "weak_tone_bins",
    "write_detection_report",
    "write_error_report",
    "write_impulse_dump",
    "write_response_dump",
]
