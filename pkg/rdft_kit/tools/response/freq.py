"""Frequency-response dump tool."""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Union

from ...dsp.response import half_power_width, peak_sidelobe_db
from ...harness import ScenarioKind, run_response_dump, write_response_dump
from ..base import _ScenarioOperation


@dataclass
class FreqResponseOperation(_ScenarioOperation):
    """Write the frequency response of one bin for each method."""

    name = "freq_response"
    kind = ScenarioKind.RESPONSE_DUMP

    async def __call__(
        self,
        methods: Optional[List[Union[int, str]]] = None,
        k_max: Optional[int] = None,
        b_max: Optional[int] = None,
        sigma: Optional[float] = None,
        horizon: Optional[int] = None,
        b_win: Optional[int] = None,
        probe_bin: Optional[int] = None,
        grid_points: Optional[int] = None,
        precision: Optional[str] = None,
        settle: Optional[int] = None,
    ) -> Dict[str, Any]:
        """Compute the response of bin k over -0.5 <= f < 0.5 and write ``f, mag_db, phase_rad`` CSVs.

        Defaults: K=8, B=4, k=2, 512 grid points, methods 1-6 and 8-12. Observers are measured
        after ``settle`` samples; every other method is evaluated in closed form.

        Args:
            methods: Method numbers (1-12) or "bandpass"
            k_max: Highest measurable bin K
            b_max: Highest analyzed bin B
            sigma: Log pole radius of the IIR methods
            horizon: Prediction horizon l of the observers
            b_win: Half-width in bins of the method 6 window
            probe_bin: Bin k whose response is dumped
            grid_points: Number of frequencies
            precision: single or double
            settle: Samples discarded before measuring an observer

        Returns:
            Status, files written and the half-power width and peak side lobe per method

        """
        scenario = self._scenario(
            methods=methods,
            k_max=k_max,
            b_max=b_max,
            sigma=sigma,
            horizon=horizon,
            b_win=b_win,
            probe_bin=probe_bin,
            grid_points=grid_points,
            precision=precision,
            settle=settle,
        )
        curves = await self._offload(run_response_dump, scenario)
        paths = write_response_dump(curves, scenario, self._root_path)
        return {
            "status": "success",
            "message": f"Wrote {len(paths)} frequency responses for k={scenario.probe_bin}",
            "files": self._relative(paths),
            "lobes": {
                method.label: {
                    "half_power_width": half_power_width(curve),
                    "peak_sidelobe_db": peak_sidelobe_db(curve),
                }
                for method, curve in curves.items()
            },
        }
