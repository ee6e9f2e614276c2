"""Impulse-response dump tool."""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Union

from ...harness import ScenarioKind, run_impulse_dump, write_impulse_dump
from ..base import _ScenarioOperation


@dataclass
class ImpulseResponseOperation(_ScenarioOperation):
    """Write the impulse response of one bin for each method."""

    name = "impulse_response"
    kind = ScenarioKind.IMPULSE_DUMP

    async def __call__(
        self,
        methods: Optional[List[Union[int, str]]] = None,
        k_max: Optional[int] = None,
        b_max: Optional[int] = None,
        sigma: Optional[float] = None,
        horizon: Optional[int] = None,
        b_win: Optional[int] = None,
        probe_bin: Optional[int] = None,
        impulse_length: Optional[int] = None,
        precision: Optional[str] = None,
    ) -> Dict[str, Any]:
        """Feed a unit impulse and write ``n, re, im, mag`` CSVs of bin k.

        Defaults: K=64, B=K, k=2, sigma=-1/M, N=5M samples, methods 9, 11 and 12.

        Args:
            methods: Method numbers (1-12) or "bandpass"
            k_max: Highest measurable bin K
            b_max: Highest analyzed bin B
            sigma: Log pole radius of the IIR methods
            horizon: Prediction horizon l of the observers
            b_win: Half-width in bins of the method 6 window
            probe_bin: Bin k whose response is dumped
            impulse_length: Samples N to record
            precision: single or double

        Returns:
            Status and files written

        """
        scenario = self._scenario(
            methods=methods,
            k_max=k_max,
            b_max=b_max,
            sigma=sigma,
            horizon=horizon,
            b_win=b_win,
            probe_bin=probe_bin,
            impulse_length=impulse_length,
            precision=precision,
        )
        responses = await self._offload(run_impulse_dump, scenario)
        paths = write_impulse_dump(responses, scenario, self._root_path)
        return {
            "status": "success",
            "message": f"Wrote {len(paths)} impulse responses of {scenario.impulse_length} samples",
            "files": self._relative(paths),
        }
