"""Small dense complex linear algebra helpers.

Everything operates on plain numpy arrays (2x2 or 4x4, complex128).  The
wrappers pin dtypes and convert LAPACK non-convergence into a typed error so
callers can map it onto a distinct exit code.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "NumericalFailureError",
    "IDENTITY_2",
    "IDENTITY_4",
    "PAULI_X",
    "PAULI_Y",
    "kron",
    "matmul",
    "dagger",
    "eig_spectrum",
    "inf_norm_diff",
]


class NumericalFailureError(RuntimeError):
    """An eigenvalue computation did not converge or returned unusable values."""


IDENTITY_2 = np.eye(2, dtype=complex)
IDENTITY_4 = np.eye(4, dtype=complex)
PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product; the first factor indexes the slower (block) axis."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product with both operands coerced to complex."""
    return np.asarray(a, dtype=complex) @ np.asarray(b, dtype=complex)


def dagger(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(m, dtype=complex).conj().T


def eig_spectrum(m: np.ndarray) -> np.ndarray:
    """Eigenvalues of a square complex matrix (no ordering guarantee).

    Raises ValueError on non-finite input and NumericalFailureError when the
    underlying QR iteration fails to converge.
    """
    m = np.asarray(m, dtype=complex)
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValueError("matrix entries must be finite")
    try:
        return np.linalg.eigvals(m)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailureError(f"eigenvalue iteration failed: {exc}") from exc


def inf_norm_diff(a: np.ndarray, b: np.ndarray) -> float:
    """Largest entrywise absolute difference between two equal-shape matrices."""
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))
