"""Window design tool."""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from fastmcp.utilities.logging import get_logger

from ...core import AsyncOperation, InvalidInputError
from ...dsp.windows import freq_to_time, slepian_freq, slepian_time, sum_of_cosine, write_window_csv

logger = get_logger(__name__)

WINDOW_KINDS = ("slepian_time", "slepian_freq", "hann", "custom")


@dataclass
class DesignWindowOperation(AsyncOperation):
    """Design a Slepian or sum-of-cosine window and export its coefficients."""

    name = "design_window"

    async def __call__(
        self,
        kind: str = "slepian_time",
        k_max: int = 64,
        b_win: Optional[int] = None,
        f_delta: Optional[float] = None,
        coefficients: Optional[List[float]] = None,
    ) -> Dict[str, Any]:
        """Design a window of length M = 2K + 1 and write it as CSV.

        Frequency windows (slepian_freq, hann, custom) are written twice: the bin coefficients to
        ``design-window_<kind>.csv`` and their time-domain equivalent to ``design-window_<kind>_time.csv``.

        Args:
            kind: One of slepian_time, slepian_freq, hann, custom
            k_max: Highest bin K
            b_win: Half-width in bins of a frequency Slepian (default 2)
            f_delta: Half-bandwidth in cycles/sample (default 2/M in time, 3/M in frequency)
            coefficients: Raw coefficients of a custom sum-of-cosine window, centre equal to 1

        Returns:
            Status, files written and the concentration alpha

        Raises:
            InvalidInputError: For an unknown kind

        """
        if kind not in WINDOW_KINDS:
            raise InvalidInputError(f"kind must be one of {', '.join(WINDOW_KINDS)}; got {kind!r}")
        length = 2 * k_max + 1
        files = []
        if kind == "slepian_time":
            time_window = slepian_time(length, f_delta if f_delta is not None else 2.0 / length)
            files.append(write_window_csv(self._output_path(f"design-window_{kind}.csv"), time_window))
        else:
            if kind == "slepian_freq":
                window = slepian_freq(length, 2 if b_win is None else b_win, f_delta or 3.0 / length)
            else:
                window = sum_of_cosine(kind, length, coefficients)
            time_window = freq_to_time(window)
            files.append(write_window_csv(self._output_path(f"design-window_{kind}.csv"), window))
            files.append(write_window_csv(self._output_path(f"design-window_{kind}_time.csv"), time_window))
        alpha = time_window.alpha
        return {
            "status": "success",
            "message": f"Designed {kind} window for M={length}",
            "files": [p.name for p in files],
            "alpha": alpha,
        }
