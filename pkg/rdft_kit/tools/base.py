"""Shared plumbing of the scenario-driven operations."""

import asyncio
from dataclasses import dataclass
from pathlib import Path
from typing import Any, ClassVar, Dict, Iterable, List

from ..core import AsyncOperation
from ..harness import Scenario, ScenarioKind


@dataclass
class _ScenarioOperation(AsyncOperation):
    kind: ClassVar[ScenarioKind]

    def _scenario(self, **values: Any) -> Scenario:
        """Build the scenario of this operation from the set (non-None) values.

        Args:
            **values: Scenario fields

        Returns:
            The validated scenario

        """
        settings: Dict[str, Any] = {key: value for key, value in values.items() if value is not None}
        settings["kind"] = self.kind
        return Scenario.from_mapping(settings)

    def _relative(self, paths: Iterable[Path]) -> List[str]:
        return [Path(p).resolve().relative_to(self._root_path).as_posix() for p in paths]

    async def _offload(self, func: Any, *args: Any) -> Any:
        # sample loops are CPU bound; keep the event loop responsive
        return await asyncio.to_thread(func, *args)
