"""Window and mixing-matrix design tools."""

from .mixing import DesignMixingOperation
from .window import DesignWindowOperation

__all__ = ["DesignMixingOperation", "DesignWindowOperation"]
