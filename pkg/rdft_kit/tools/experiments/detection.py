"""Weak-tone detection tool."""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Union

from ...harness import ScenarioKind, run_detection, write_detection_report
from ..base import _ScenarioOperation


@dataclass
class DetectionOperation(_ScenarioOperation):
    """Compare how each method resolves a weak tone next to a strong one."""

    name = "detection"
    kind = ScenarioKind.DETECTION

    async def __call__(
        self,
        methods: Optional[List[Union[int, str]]] = None,
        k_max: Optional[int] = None,
        b_max: Optional[int] = None,
        sigma: Optional[float] = None,
        horizon: Optional[int] = None,
        b_win: Optional[int] = None,
        settle: Optional[int] = None,
    ) -> Dict[str, Any]:
        """Analyse a unit tone at 7.5 bins plus a 0.01 tone at 17.5 bins, in double precision.

        Writes ``k, mag, mag_db, strong_only, weak_only, detected`` per method. Defaults: K=64, B=32,
        methods 1, 2, 5, 6, 8, 10, 11 and 12.

        Args:
            methods: Method numbers (1-12) or "bandpass"
            k_max: Highest measurable bin K
            b_max: Highest analyzed bin B
            sigma: Log pole radius of the IIR methods
            horizon: Prediction horizon l of the observers
            b_win: Half-width in bins of the method 6 window
            settle: Samples discarded before averaging (default 50M)

        Returns:
            Status, files written and, per method label, whether the weak tone was detected

        """
        scenario = self._scenario(
            methods=methods,
            k_max=k_max,
            b_max=b_max,
            sigma=sigma,
            horizon=horizon,
            b_win=b_win,
            settle=settle,
        )
        results = await self._offload(run_detection, scenario)
        paths = write_detection_report(results, scenario, self._root_path)
        return {
            "status": "success",
            "message": f"Wrote detection magnitudes of bins 0..{scenario.b_max} for {len(paths)} methods",
            "files": self._relative(paths),
            "weak_tone_detected": {method.label: res.weak_tone_detected for method, res in results.items()},
        }
