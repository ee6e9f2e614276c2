"""Method catalogue tool."""

from dataclasses import asdict, dataclass
from typing import Any, Dict

from ..core import AsyncOperation
from ..dsp.filterbank import Method, method_summary


@dataclass
class ListMethodsOperation(AsyncOperation):
    """List the filter-bank methods with their structure and output characteristics."""

    name = "list_methods"

    async def __call__(self) -> Dict[str, Any]:
        """Describe every method: family, impulse response, recursion, window and lobe behaviour.

        Returns:
            Status and one entry per method keyed by its label

        """
        methods = {}
        for method in Method:
            row = asdict(method_summary(method))
            row["method"] = method.label
            methods[method.label] = row
        return {"status": "success", "message": f"{len(methods)} methods", "methods": methods}
