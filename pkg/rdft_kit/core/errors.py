"""Exception hierarchy shared by the design, streaming and harness layers."""

from typing import Optional


class SpectrumError(Exception):
    """Base class for every error raised by rdft_kit."""


class InvalidInputError(SpectrumError, ValueError):
    """A configuration or argument violates one of its documented constraints."""


class InvalidStateError(SpectrumError, RuntimeError):
    """The object is not in a state that allows the requested call."""


class UnsupportedMethodError(SpectrumError, ValueError):
    """The requested quantity is not defined for the chosen method."""


class IllConditionedError(SpectrumError, ArithmeticError):
    """A linear system is too ill-conditioned to be solved reliably.

    Attributes:
        estimate: 2-norm condition number estimate of the offending matrix.

    """

    def __init__(self, message: str, estimate: float) -> None:
        """Store the condition estimate next to the message.

        Args:
            message: Human readable diagnostic
            estimate: Condition number estimate

        """
        super().__init__(message)
        self.estimate = estimate


class NumericalFailureError(SpectrumError, ArithmeticError):
    """An iterative numerical kernel did not converge.

    Attributes:
        iterations: Iterations performed before giving up, when the backend reports it.

    """

    def __init__(self, message: str, iterations: Optional[int] = None) -> None:
        """Store the iteration count next to the message.

        Args:
            message: Human readable diagnostic
            iterations: Iteration count reported by the solver, if any

        """
        super().__init__(message)
        self.iterations = iterations
