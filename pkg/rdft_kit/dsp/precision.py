"""Arithmetic precision of the streaming path."""

from enum import Enum
from typing import Any, Type

import numpy as np

from ..core.errors import InvalidInputError


class Precision(str, Enum):
    """Runtime precision. Design is always carried out in double."""

    SINGLE = "single"
    DOUBLE = "double"

    @property
    def real_dtype(self) -> Type[np.floating[Any]]:
        """Real scalar type used by the streaming path."""
        return np.float32 if self is Precision.SINGLE else np.float64

    @property
    def complex_dtype(self) -> Type[np.complexfloating[Any, Any]]:
        """Complex scalar type used by the streaming path."""
        return np.complex64 if self is Precision.SINGLE else np.complex128

    @classmethod
    def parse(cls, value: "str | Precision") -> "Precision":
        """Accept an enum member or its string value.

        Args:
            value: ``"single"``, ``"double"`` or a member

        Returns:
            The matching member

        Raises:
            InvalidInputError: If the value names no precision

        """
        if isinstance(value, Precision):
            return value
        try:
            return cls(str(value).lower())
        except ValueError as e:
            raise InvalidInputError(f"precision must be one of single, double; got {value!r}") from e
