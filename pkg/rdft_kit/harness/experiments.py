"""Experiment drivers: rounding-error table, weak-tone detection, response and impulse dumps."""

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import numpy as np
from fastmcp.utilities.logging import get_logger
from numpy.typing import NDArray

from ..core.csvio import write_csv
from ..core.errors import InvalidInputError
from ..dsp.filterbank import FilterBank, Method
from ..dsp.precision import Precision
from ..dsp.response import (
    ResponseCurve,
    analytic_response,
    empirical_response,
    impulse_response,
    write_impulse_csv,
    write_response_csv,
)
from .scenario import Scenario, add_noise, gen_signal

logger = get_logger(__name__)

# (amplitude, frequency in bins) of the strong and the weak detection tones
STRONG_TONE = (1.0, 7.5)
WEAK_TONE = (0.01, 17.5)


@dataclass(frozen=True)
class MethodErrors:
    """Magnitude error of one method against its double-precision, noise-free reference."""

    method: Method
    precision: Precision
    rmse: Tuple[float, ...]
    checkpoints: Tuple[Tuple[int, float], ...]
    seconds: float

    def error_at(self, n: int) -> float:
        """Error recorded after ``n`` samples.

        Args:
            n: Sample count of a checkpoint

        Returns:
            ``|X_ref| - |X̂|`` at that checkpoint

        Raises:
            InvalidInputError: If no checkpoint was taken at ``n``

        """
        for count, err in self.checkpoints:
            if count == n:
                return err
        raise InvalidInputError(f"no checkpoint at n={n}")


@dataclass(frozen=True)
class ErrorReport:
    """Results of :func:`run_table1`, one entry per method."""

    scenario: Scenario
    results: Dict[Method, MethodErrors]


@dataclass(frozen=True)
class DetectionResult:
    """Steady-state mean magnitudes of bins ``0 … B`` for the two-tone test."""

    method: Method
    bins: NDArray[np.int64]
    magnitude: NDArray[np.float64]
    strong_only: NDArray[np.float64]
    weak_only: NDArray[np.float64]

    @property
    def detected(self) -> NDArray[np.bool_]:
        """Per bin, whether the weak tone alone rises above the strong tone's leakage."""
        return self.weak_only > self.strong_only

    @property
    def weak_tone_detected(self) -> bool:
        """Whether both bins next to the weak tone are detected."""
        bins = [k for k in weak_tone_bins() if k < self.bins.shape[0]]
        return bool(bins) and bool(np.all(self.detected[bins]))


def weak_tone_bins() -> Tuple[int, int]:
    """The two bins that straddle the weak tone."""
    position = WEAK_TONE[1]
    return math.floor(position), math.ceil(position)


def _method_errors(scenario: Scenario, method: Method) -> MethodErrors:
    config = scenario.method_config(method)
    bank = FilterBank.build(config)
    reference = FilterBank.build(scenario.method_config(method, Precision.DOUBLE))
    index = config.bin_index(scenario.probe_bin)
    seg_len, interval = scenario.segment_length, scenario.checkpoint_interval
    rmse: List[float] = []
    checkpoints: List[Tuple[int, float]] = []
    logger.info(f"table1: method {method.label} ({scenario.precision.value}), {scenario.total_samples} samples")
    start_time = time.perf_counter()
    for segment in range(scenario.segments):
        start = segment * seg_len
        clean = gen_signal(scenario, range(start, start + seg_len))
        noisy = add_noise(clean, scenario, start)
        errors = np.fromiter(
            (
                abs(ref.windowed[index]) - abs(est.windowed[index])
                for ref, est in zip(reference.iter_frames(clean), bank.iter_frames(noisy))
            ),
            dtype=np.float64,
            count=seg_len,
        )
        rmse.append(float(np.sqrt(np.mean(errors**2))))
        first = interval - start % interval
        for offset in range(first - 1, seg_len, interval):
            checkpoints.append((start + offset + 1, float(errors[offset])))
    seconds = time.perf_counter() - start_time
    logger.info(f"table1: method {method.label} finished in {seconds:.1f} s")
    return MethodErrors(
        method=method,
        precision=scenario.precision,
        rmse=tuple(rmse),
        checkpoints=tuple(checkpoints),
        seconds=seconds,
    )


def run_table1(scenario: Scenario) -> ErrorReport:
    """Magnitude error of every requested method against a double-precision reference.

    The test bank runs in the scenario precision on the noisy signal; the reference runs the
    same method in double precision on the noise-free signal. The error at the probe bin is
    ``|X_ref| - |X̂|``.

    Args:
        scenario: A table1 scenario

    Returns:
        Per-segment RMSE, checkpoint errors and wall-clock time per method

    """
    if scenario.workers > 1 and len(scenario.methods) > 1:
        with ProcessPoolExecutor(max_workers=scenario.workers) as pool:
            errors = list(pool.map(_method_errors, [scenario] * len(scenario.methods), scenario.methods))
    else:
        errors = [_method_errors(scenario, method) for method in scenario.methods]
    return ErrorReport(scenario=scenario, results={e.method: e for e in errors})


def _tone(n: NDArray[np.int64], length: int, tone: Tuple[float, float]) -> NDArray[np.float64]:
    amplitude, bins = tone
    return amplitude * np.cos(2.0 * np.pi * bins * n / length)


def _mean_magnitudes(bank: FilterBank, xs: NDArray[np.float64], keep: int, b_max: int) -> NDArray[np.float64]:
    bank.reset()
    total = np.zeros(b_max + 1)
    skip = xs.shape[0] - keep
    for i, frame in enumerate(bank.iter_frames(xs)):
        if i >= skip:
            total += np.abs(frame.windowed[b_max:])
    return total / keep


def run_detection(scenario: Scenario) -> Dict[Method, DetectionResult]:
    """Weak-tone detection next to a strong tone.

    A unit tone at 7.5 bins and a 0.01 tone at 17.5 bins are analysed together and separately;
    each bin reports its mean magnitude over the final 2M samples after ``settle`` samples.

    Args:
        scenario: A detection scenario

    Returns:
        Per-method magnitudes and detection verdicts for bins ``0 … B``

    """
    length, b_max = scenario.length, scenario.b_max
    keep = 2 * length
    n = np.arange(scenario.settle + keep)
    strong = _tone(n, length, STRONG_TONE)
    weak = _tone(n, length, WEAK_TONE)
    results: Dict[Method, DetectionResult] = {}
    for method in scenario.methods:
        bank = FilterBank.build(scenario.method_config(method, Precision.DOUBLE))
        logger.info(f"detection: method {method.label}")
        result = DetectionResult(
            method=method,
            bins=np.arange(b_max + 1),
            magnitude=_mean_magnitudes(bank, strong + weak, keep, b_max),
            strong_only=_mean_magnitudes(bank, strong, keep, b_max),
            weak_only=_mean_magnitudes(bank, weak, keep, b_max),
        )
        logger.info(f"detection: method {method.label} weak tone detected: {result.weak_tone_detected}")
        results[method] = result
    return results


def response_grid(points: int) -> NDArray[np.float64]:
    """Uniform grid over one period, ``-0.5 <= f < 0.5``.

    Args:
        points: Number of frequencies

    Returns:
        The grid in cycles/sample

    """
    return -0.5 + np.arange(points) / points


def run_response_dump(scenario: Scenario) -> Dict[Method, ResponseCurve]:
    """Frequency response of the probe bin for every requested method.

    Observers are measured; every other method is evaluated in closed form.

    Args:
        scenario: A freq-response scenario

    Returns:
        Curves keyed by method

    """
    grid = response_grid(scenario.grid_points)
    curves: Dict[Method, ResponseCurve] = {}
    for method in scenario.methods:
        config = scenario.method_config(method)
        if method.is_observer:
            curves[method] = empirical_response(config, scenario.probe_bin, grid, settle=scenario.settle)
        else:
            curves[method] = analytic_response(config, scenario.probe_bin, grid)
    return curves


def run_impulse_dump(scenario: Scenario) -> Dict[Method, NDArray[np.complex128]]:
    """Impulse response of the probe bin for every requested method.

    Args:
        scenario: An impulse-response scenario

    Returns:
        ``impulse_length`` samples per method

    """
    return {
        method: impulse_response(scenario.method_config(method), scenario.probe_bin, scenario.impulse_length)
        for method in scenario.methods
    }


def output_name(scenario: Scenario, method: Method, precision: Optional[Precision] = None) -> str:
    """CSV file name ``<scenario>_<method>_<precision>.csv``.

    Args:
        scenario: Scenario that produced the data
        method: Method of the file
        precision: Override of the scenario precision

    Returns:
        The file name

    """
    return f"{scenario.kind.value}_{method.label}_{(precision or scenario.precision).value}.csv"


def write_error_report(report: ErrorReport, out_dir: str | Path) -> List[Path]:
    """Write one CSV per method plus a summary.

    Per-method files list ``quantity, n, value`` rows for checkpoints, segment RMSE and timing.

    Args:
        report: Result of :func:`run_table1`
        out_dir: Destination directory

    Returns:
        Paths written, summary last

    """
    out = Path(out_dir)
    scenario = report.scenario
    paths = []
    summary = []
    for method, errors in report.results.items():
        rows: List[Tuple[str, int, float]] = [("err", n, err) for n, err in errors.checkpoints]
        rows += [("rmse", segment + 1, value) for segment, value in enumerate(errors.rmse)]
        rows.append(("seconds", 0, errors.seconds))
        paths.append(write_csv(out / output_name(scenario, method), ("quantity", "n", "value"), rows))
        first_err = errors.checkpoints[0][1] if errors.checkpoints else math.nan
        last_err = errors.checkpoints[-1][1] if errors.checkpoints else math.nan
        summary.append((method.label, errors.rmse[-1], first_err, last_err, errors.seconds))
    comment = (
        f"K={scenario.k_max}, B={scenario.b_max}, k={scenario.probe_bin}, sigma={scenario.sigma!r}, "
        f"noise={scenario.noise.value}, seed={scenario.seed}"
    )
    summary_path = out / f"{scenario.kind.value}_summary_{scenario.precision.value}.csv"
    paths.append(
        write_csv(
            summary_path, ("method", "rmse_last_segment", "err_first", "err_last", "seconds"), summary, comment
        )
    )
    return paths


def write_detection_report(
    results: Dict[Method, DetectionResult], scenario: Scenario, out_dir: str | Path
) -> List[Path]:
    """Write ``k, mag, mag_db, strong_only, weak_only, detected`` rows per method.

    ``detected`` is 1 where the weak tone alone exceeds the strong tone's leakage, else 0.

    Args:
        results: Result of :func:`run_detection`
        scenario: The detection scenario
        out_dir: Destination directory

    Returns:
        Paths written

    """
    out = Path(out_dir)
    tiny = np.finfo(np.float64).tiny
    paths = []
    for method, res in results.items():
        rows = (
            (int(k), float(mag), float(20 * np.log10(max(mag, tiny))), float(s), float(w), int(hit))
            for k, mag, s, w, hit in zip(res.bins, res.magnitude, res.strong_only, res.weak_only, res.detected)
        )
        header = ("k", "mag", "mag_db", "strong_only", "weak_only", "detected")
        paths.append(write_csv(out / output_name(scenario, method), header, rows))
    return paths


def write_response_dump(curves: Dict[Method, ResponseCurve], scenario: Scenario, out_dir: str | Path) -> List[Path]:
    """Write ``f, mag_db, phase_rad`` rows per method.

    Args:
        curves: Result of :func:`run_response_dump`
        scenario: The freq-response scenario
        out_dir: Destination directory

    Returns:
        Paths written

    """
    out = Path(out_dir)
    return [write_response_csv(out / output_name(scenario, method), curve) for method, curve in curves.items()]


def write_impulse_dump(
    responses: Dict[Method, NDArray[np.complex128]], scenario: Scenario, out_dir: str | Path
) -> List[Path]:
    """Write ``n, re, im, mag`` rows per method.

    Args:
        responses: Result of :func:`run_impulse_dump`
        scenario: The impulse-response scenario
        out_dir: Destination directory

    Returns:
        Paths written

    """
    out = Path(out_dir)
    paths = []
    for method, h in responses.items():
        config = scenario.method_config(method)
        comment = f"method={method.label}, K={config.k_max}, B={config.b_max}, k={scenario.probe_bin}"
        if config.sigma is not None:
            comment += f", sigma={config.sigma!r}"
        paths.append(write_impulse_csv(out / output_name(scenario, method), h, comment=comment))
    return paths

