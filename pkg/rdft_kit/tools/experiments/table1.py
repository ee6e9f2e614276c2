"""Rounding-error experiment tool."""

import math
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Union

from ...harness import ScenarioKind, run_table1, write_error_report
from ..base import _ScenarioOperation


@dataclass
class Table1Operation(_ScenarioOperation):
    """Measure the magnitude error of each method against a double-precision noise-free reference."""

    name = "table1"
    kind = ScenarioKind.TABLE1

    async def __call__(
        self,
        methods: Optional[List[Union[int, str]]] = None,
        k_max: Optional[int] = None,
        b_max: Optional[int] = None,
        sigma: Optional[float] = None,
        horizon: Optional[int] = None,
        b_win: Optional[int] = None,
        precision: Optional[str] = None,
        segments: Optional[int] = None,
        segment_length: Optional[int] = None,
        noise: Optional[str] = None,
        seed: Optional[int] = None,
        probe_bin: Optional[int] = None,
        checkpoint_interval: Optional[int] = None,
        quick: Optional[bool] = None,
        long_run: Optional[bool] = None,
        workers: Optional[int] = None,
    ) -> Dict[str, Any]:
        """Run the rounding-error experiment and write per-method and summary CSVs.

        Defaults: K=64, B=32, k=16, sigma=-1/(2M), two segments of 1e6 samples, methods
        1, 3, 4, 5, 8, 9, 10 and 12. ``quick`` uses 1e5-sample segments with five checkpoints
        each; ``long_run`` runs 100 segments.

        Args:
            methods: Method numbers (1-12) or "bandpass"
            k_max: Highest measurable bin K
            b_max: Highest analyzed bin B
            sigma: Log pole radius of the IIR methods
            horizon: Prediction horizon l of the observers
            b_win: Half-width in bins of the method 6 window
            precision: single or double, the precision of the tested banks
            segments: Number of segments
            segment_length: Samples per segment
            noise: none, gaussian or impulsive
            seed: RNG seed of the signal phases and the noise
            probe_bin: Bin k whose error is measured
            checkpoint_interval: Samples between error checkpoints
            quick: Short CI-sized run
            long_run: 100 segments
            workers: Worker processes, one method each

        Returns:
            Status, files written and, per method, the last-segment RMSE, last error and runtime

        """
        scenario = self._scenario(
            methods=methods,
            k_max=k_max,
            b_max=b_max,
            sigma=sigma,
            horizon=horizon,
            b_win=b_win,
            precision=precision,
            segments=segments,
            segment_length=segment_length,
            noise=noise,
            seed=seed,
            probe_bin=probe_bin,
            checkpoint_interval=checkpoint_interval,
            quick=quick,
            long_run=long_run,
            workers=workers,
        )
        report = await self._offload(run_table1, scenario)
        paths = write_error_report(report, self._root_path)
        return {
            "status": "success",
            "message": f"Measured {len(report.results)} methods over {scenario.total_samples} samples",
            "files": self._relative(paths),
            "results": {
                method.label: {
                    "rmse_last_segment": errors.rmse[-1],
                    "err_last": errors.checkpoints[-1][1] if errors.checkpoints else math.nan,
                    "seconds": errors.seconds,
                }
                for method, errors in report.results.items()
            },
        }
