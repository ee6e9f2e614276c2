"""Dense linear-algebra kernel used by window and mixing design.

All routines work in double precision on small matrices (order ≤ a few hundred).
"""

from typing import Tuple

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ..core.errors import IllConditionedError, InvalidInputError, NumericalFailureError

DEFAULT_CONDITION_BOUND = 1e12
SYMMETRY_TOLERANCE = 1e-10


def _as_square(a: ArrayLike, what: str) -> NDArray[np.complex128] | NDArray[np.float64]:
    arr = np.asarray(a)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise InvalidInputError(f"{what} must be a square matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvalidInputError(f"{what} contains non-finite entries")
    if np.iscomplexobj(arr):
        return arr.astype(np.complex128)
    return arr.astype(np.float64)


def is_hermitian(a: ArrayLike, tol: float = SYMMETRY_TOLERANCE) -> bool:
    """Check ``a == a^H`` up to a relative tolerance.

    Args:
        a: Square matrix
        tol: Relative tolerance against the largest entry

    Returns:
        True when the matrix is Hermitian (symmetric for real input)

    """
    arr = np.asarray(a)
    scale = max(float(np.max(np.abs(arr), initial=0.0)), 1.0)
    return bool(np.max(np.abs(arr - arr.conj().T), initial=0.0) <= tol * scale)


def eig_sym(a: ArrayLike) -> Tuple[NDArray[np.float64], NDArray[np.complex128] | NDArray[np.float64]]:
    """Eigen-decomposition of a real-symmetric or Hermitian matrix.

    Args:
        a: Square symmetric/Hermitian matrix

    Returns:
        ``(eigenvalues, eigenvectors)`` with eigenvalues in descending order and
        unit-norm eigenvectors in the matching columns

    Raises:
        InvalidInputError: If ``a`` is not square, not finite or not symmetric
        NumericalFailureError: If the eigensolver does not converge

    """
    arr = _as_square(a, "eig_sym input")
    if not is_hermitian(arr):
        raise InvalidInputError("eig_sym input must be symmetric (Hermitian) within 1e-10 relative")
    try:
        values, vectors = np.linalg.eigh(arr)
    except np.linalg.LinAlgError as e:
        raise NumericalFailureError(f"Symmetric eigensolver did not converge: {e}") from e
    order = np.argsort(values)[::-1]
    return values[order], vectors[:, order]


def condition_estimate(a: ArrayLike) -> float:
    """Two-norm condition number of a square matrix.

    Args:
        a: Square matrix

    Returns:
        ``σ_max / σ_min``; ``inf`` for a singular matrix

    Raises:
        NumericalFailureError: If the SVD does not converge

    """
    arr = _as_square(a, "condition_estimate input")
    if arr.shape[0] == 0:
        return 1.0
    try:
        singular = np.linalg.svd(arr, compute_uv=False)
    except np.linalg.LinAlgError as e:
        raise NumericalFailureError(f"SVD did not converge: {e}") from e
    if singular[-1] == 0.0:
        return float("inf")
    return float(singular[0] / singular[-1])


def solve_linear(a: ArrayLike, b: ArrayLike, bound: float = DEFAULT_CONDITION_BOUND) -> NDArray[np.complex128]:
    """Solve ``a x = b`` for a square, well-conditioned ``a``.

    Args:
        a: Square coefficient matrix
        b: Right-hand side, vector or matrix with ``a.shape[0]`` rows
        bound: Largest acceptable condition estimate

    Returns:
        The solution, complex

    Raises:
        InvalidInputError: If shapes do not agree
        IllConditionedError: If the condition estimate exceeds ``bound``
        NumericalFailureError: If the factorization fails

    """
    arr = _as_square(a, "solve_linear matrix")
    rhs = np.asarray(b)
    if rhs.shape[0] != arr.shape[0]:
        raise InvalidInputError(f"Right-hand side has {rhs.shape[0]} rows, matrix has {arr.shape[0]}")
    estimate = condition_estimate(arr)
    if not estimate <= bound:
        raise IllConditionedError(f"Condition estimate {estimate:.3e} exceeds bound {bound:.1e}", estimate)
    try:
        return np.linalg.solve(arr, rhs).astype(np.complex128)
    except np.linalg.LinAlgError as e:
        raise NumericalFailureError(f"Linear solve failed: {e}") from e
