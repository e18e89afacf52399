"""Two-qubit states whose density matrix has the X shape.

Basis order is |++>, |+->, |-+>, |--> with |+> the upper (excited) level of
each qubit.  An X state carries populations a, b, c, d on the diagonal, an
inner coherence z between |+-> and |-+>, and an outer coherence w between
|++> and |-->.  All dense matrices are 4x4 complex numpy arrays in this
basis.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .linalg import IDENTITY_2, PAULI_X, dagger, inf_norm_diff, kron, matmul

__all__ = [
    "NotXStateError",
    "XState",
    "StateDiagnostics",
    "LocalUnitary",
    "X_POSITIONS",
    "OFF_X_POSITIONS",
    "werner_psi",
    "werner_phi",
    "to_dense",
    "from_dense",
    "validate",
    "apply_local_unitary",
    "flip_a_unitary",
    "random_x_state",
    "random_local_unitary",
]

_TRACE_TOL = 1e-12
_BLOCK_TOL = 1e-12
_UNITARY_TOL = 1e-12

X_POSITIONS = ((0, 0), (1, 1), (2, 2), (3, 3), (0, 3), (1, 2), (2, 1), (3, 0))
OFF_X_POSITIONS = tuple(
    (i, j) for i in range(4) for j in range(4) if (i, j) not in X_POSITIONS
)


class NotXStateError(ValueError):
    """A dense matrix carried weight outside the X positions."""


@dataclass(frozen=True)
class XState:
    """Six-parameter X-form density matrix.

    a, b, c, d are the populations of |++>, |+->, |-+>, |-->.  z is the
    coherence between |+-> and |-+> (row 1, column 2 of the dense matrix),
    w the one between |++> and |--> (row 0, column 3).  Construction
    enforces unit trace and positivity of the two independent 2x2 blocks,
    |z|^2 <= b*c and |w|^2 <= a*d, all within 1e-12.
    """

    a: float
    b: float
    c: float
    d: float
    z: complex = 0.0j
    w: complex = 0.0j

    def __post_init__(self) -> None:
        pops = (self.a, self.b, self.c, self.d)
        if not all(math.isfinite(float(p)) for p in pops):
            raise ValueError("populations must be finite")
        if not (cmath.isfinite(complex(self.z)) and cmath.isfinite(complex(self.w))):
            raise ValueError("coherences must be finite")
        if min(pops) < -_TRACE_TOL:
            raise ValueError(f"negative population {min(pops)}")
        total = self.a + self.b + self.c + self.d
        if abs(total - 1.0) > _TRACE_TOL:
            raise ValueError(f"populations must sum to 1, got {total}")
        if abs(self.z) ** 2 > self.b * self.c + _BLOCK_TOL:
            raise ValueError("inner coherence too large: |z|^2 > b*c")
        if abs(self.w) ** 2 > self.a * self.d + _BLOCK_TOL:
            raise ValueError("outer coherence too large: |w|^2 > a*d")


def _check_fidelity(fidelity: float) -> float:
    if not (isinstance(fidelity, (int, float)) and math.isfinite(fidelity)):
        raise ValueError("fidelity must be a finite number")
    if not 0.25 <= fidelity <= 1.0:
        raise ValueError(f"fidelity must lie in [0.25, 1], got {fidelity}")
    return float(fidelity)


def werner_psi(fidelity: float) -> XState:
    """Werner mixture of the Bell state (|+-> - |-+>)/sqrt(2).

    fidelity is the overlap with that Bell state: 1/4 gives the maximally
    mixed state, 1 the pure Bell state.  The inner coherence is signed,
    z = (1 - 4*fidelity)/6, negative for fidelity above 1/4.
    """
    f = _check_fidelity(fidelity)
    edge = (1.0 - f) / 3.0
    mid = (2.0 * f + 1.0) / 6.0
    return XState(a=edge, b=mid, c=mid, d=edge, z=complex((1.0 - 4.0 * f) / 6.0), w=0.0j)


def werner_phi(fidelity: float) -> XState:
    """Werner mixture of the Bell state (|++> - |-->)/sqrt(2).

    Same weights as werner_psi with the inner and outer 2x2 blocks
    exchanged; the coherence sits at w instead of z.
    """
    f = _check_fidelity(fidelity)
    edge = (1.0 - f) / 3.0
    mid = (2.0 * f + 1.0) / 6.0
    return XState(a=mid, b=edge, c=edge, d=mid, z=0.0j, w=complex((1.0 - 4.0 * f) / 6.0))


def to_dense(state: XState) -> np.ndarray:
    """Dense 4x4 density matrix of an X state."""
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = state.a
    rho[1, 1] = state.b
    rho[2, 2] = state.c
    rho[3, 3] = state.d
    rho[1, 2] = state.z
    rho[2, 1] = complex(state.z).conjugate()
    rho[0, 3] = state.w
    rho[3, 0] = complex(state.w).conjugate()
    return rho


def from_dense(rho: np.ndarray, tol: float = 1e-10) -> XState:
    """Read the six X parameters back out of a dense matrix.

    Raises NotXStateError if any entry outside the X positions, or any
    imaginary part on the diagonal, exceeds tol.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {rho.shape}")
    off = max(abs(complex(rho[i, j])) for i, j in OFF_X_POSITIONS)
    if off > tol:
        raise NotXStateError(f"off-X weight {off:.3e} exceeds tol {tol:.3e}")
    diag_imag = max(abs(complex(rho[i, i]).imag) for i in range(4))
    if diag_imag > tol:
        raise NotXStateError(f"imaginary diagonal weight {diag_imag:.3e} exceeds tol {tol:.3e}")
    return XState(
        a=float(rho[0, 0].real),
        b=float(rho[1, 1].real),
        c=float(rho[2, 2].real),
        d=float(rho[3, 3].real),
        z=complex(rho[1, 2]),
        w=complex(rho[0, 3]),
    )


@dataclass(frozen=True)
class StateDiagnostics:
    """Report on how well a dense matrix behaves as a density matrix."""

    hermiticity_residual: float
    trace_deviation: float
    min_eigenvalue: float

    def ok(
        self,
        herm_tol: float = 1e-12,
        trace_tol: float = 1e-12,
        eig_tol: float = 1e-10,
    ) -> bool:
        return (
            self.hermiticity_residual <= herm_tol
            and self.trace_deviation <= trace_tol
            and self.min_eigenvalue >= -eig_tol
        )


def validate(rho: np.ndarray) -> StateDiagnostics:
    """Measure Hermiticity, trace and positivity of a dense matrix.

    Pure report; nothing is raised regardless of how bad the input is.
    """
    rho = np.asarray(rho, dtype=complex)
    herm = inf_norm_diff(rho, dagger(rho))
    trace_dev = abs(complex(np.trace(rho)) - 1.0)
    sym = 0.5 * (rho + dagger(rho))
    min_eig = float(np.linalg.eigvalsh(sym)[0])
    return StateDiagnostics(herm, trace_dev, min_eig)


@dataclass(frozen=True)
class LocalUnitary:
    """Separate unitaries u_a on qubit A and u_b on qubit B."""

    u_a: np.ndarray
    u_b: np.ndarray

    def as_matrix(self) -> np.ndarray:
        return kron(self.u_a, self.u_b)


def _unitarity_residual(u: np.ndarray) -> float:
    return inf_norm_diff(matmul(dagger(u), u), IDENTITY_2)


def apply_local_unitary(rho: np.ndarray, lu: LocalUnitary) -> np.ndarray:
    """Conjugate a dense matrix by a product unitary; the spectrum is kept.

    Raises ValueError if either factor misses unitarity by more than 1e-12.
    """
    for name, u in (("u_a", lu.u_a), ("u_b", lu.u_b)):
        res = _unitarity_residual(u)
        if res > _UNITARY_TOL:
            raise ValueError(f"{name} is not unitary (residual {res:.3e})")
    u4 = lu.as_matrix()
    return matmul(matmul(u4, np.asarray(rho, dtype=complex)), dagger(u4))


def flip_a_unitary() -> LocalUnitary:
    """Bit flip of qubit A (times i), identity on qubit B.

    Conjugation swaps basis indices 0<->2 and 1<->3 and exchanges the roles
    of the inner and outer coherences, taking werner_psi(F) exactly onto
    werner_phi(F).
    """
    return LocalUnitary(u_a=1j * PAULI_X, u_b=IDENTITY_2.copy())


def random_x_state(rng: np.random.Generator) -> XState:
    """Draw a valid X state.

    Populations are Dirichlet-uniform on the simplex, coherence magnitudes
    uniform on their positivity intervals, phases uniform.
    """
    a, b, c, d = (float(p) for p in rng.dirichlet((1.0, 1.0, 1.0, 1.0)))
    z_mag = rng.uniform(0.0, math.sqrt(b * c))
    w_mag = rng.uniform(0.0, math.sqrt(a * d))
    z = z_mag * cmath.exp(1j * rng.uniform(0.0, 2.0 * math.pi))
    w = w_mag * cmath.exp(1j * rng.uniform(0.0, 2.0 * math.pi))
    return XState(a=a, b=b, c=c, d=d, z=z, w=w)


def _haar_unitary_2(rng: np.random.Generator) -> np.ndarray:
    g = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_local_unitary(rng: np.random.Generator) -> LocalUnitary:
    """Independent Haar-random unitaries on the two qubits."""
    return LocalUnitary(u_a=_haar_unitary_2(rng), u_b=_haar_unitary_2(rng))
