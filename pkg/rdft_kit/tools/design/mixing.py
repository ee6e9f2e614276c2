"""Mixing-matrix design tool."""

from dataclasses import asdict, dataclass
from typing import Any, Dict, Optional

from ...core import AsyncOperation
from ...dsp.mixing import design_mixing, load_mixing_csv, orthonormality_check, write_mixing_csv
from ...dsp.numerics import DEFAULT_CONDITION_BOUND


@dataclass
class DesignMixingOperation(AsyncOperation):
    """Design (or reload) the mixing matrix of a stabilized IIR bank and verify it."""

    name = "design_mixing"

    async def __call__(
        self,
        b_max: int = 4,
        k_max: int = 8,
        sigma: Optional[float] = None,
        load: Optional[str] = None,
        condition_bound: float = DEFAULT_CONDITION_BOUND,
    ) -> Dict[str, Any]:
        """Invert the Gram matrix of a damped resonator bank and check orthonormality.

        Writes ``design-mixing_B<B>_K<K>.csv``. With ``load`` an exported matrix inside the root
        directory is read back and checked instead; nothing is written.

        Args:
            b_max: Highest bin B
            k_max: Highest measurable bin K
            sigma: Log pole radius, negative (default -1/M)
            load: CSV written by an earlier design, relative to the root directory
            condition_bound: Largest acceptable condition estimate

        Returns:
            Status, condition estimate and orthonormality deviations

        """
        if load is not None:
            mix = load_mixing_csv(self._validate_path_in_root(self._root_path, load))
            files = []
        else:
            length = 2 * k_max + 1
            mix = design_mixing(b_max, length, -1.0 / length if sigma is None else sigma, bound=condition_bound)
            files = [write_mixing_csv(self._output_path(f"design-mixing_B{mix.b_max}_K{mix.k_max}.csv"), mix).name]
        result: Dict[str, Any] = {
            "status": "success",
            "message": f"Mixing matrix B={mix.b_max} M={mix.length} sigma={mix.sigma:.6g}",
            "files": files,
            "condition": mix.condition,
            "hermitian": mix.is_hermitian,
        }
        if not mix.fused_window:
            report = orthonormality_check(mix)
            result["orthonormality"] = {**asdict(report), "passed": report.passed}
        return result
