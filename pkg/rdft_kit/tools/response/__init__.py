"""Frequency- and impulse-response tools."""

from .freq import FreqResponseOperation
from .impulse import ImpulseResponseOperation

__all__ = ["FreqResponseOperation", "ImpulseResponseOperation"]
