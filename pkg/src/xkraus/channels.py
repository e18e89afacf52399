"""Markovian noise channels acting independently on each qubit.

Three kinds are supported, each driven by per-qubit damping factors
gamma = exp(-rate * t / 2) and omega = sqrt(1 - gamma^2):

* ``phase``       pure dephasing; populations are untouched and each
                  coherence picks up one factor of gamma per damped qubit.
* ``amplitude``   decay of the upper level |+> into |->; population moves
                  down while coherences shrink.
* ``equalizing``  symmetric up/down relaxation; each qubit's populations mix
                  toward 1/2, so every input is driven to the maximally
                  mixed state.

A channel acts either through its explicit Kraus operators (``apply``) or
through closed-form update rules on X states (``propagate_x``).  Both routes
preserve the X shape and agree to machine precision; the tests pin that
equivalence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .linalg import dagger, inf_norm_diff, kron, matmul
from .states import OFF_X_POSITIONS, XState, from_dense, to_dense

__all__ = [
    "CHANNEL_KINDS",
    "DampingFactors",
    "ChannelSpec",
    "damping",
    "kraus_phase",
    "kraus_amplitude",
    "kraus_equalizing_1q",
    "kraus_equalizing",
    "kraus_set",
    "product_channel",
    "check_cptp",
    "apply",
    "propagate_x",
    "x_form_residual",
]

CHANNEL_KINDS = ("phase", "amplitude", "equalizing")

_CPTP_REJECT_TOL = 1e-12


class DampingFactors(NamedTuple):
    """Per-qubit decay pair: gamma weights the surviving amplitude, omega the
    transferred one, with gamma^2 + omega^2 = 1."""

    gamma: float
    omega: float


def damping(rate: float, t: float) -> DampingFactors:
    """Damping factors after evolving for time t at the given rate.

    gamma = exp(-rate * t / 2) runs from 1 at t = 0 toward 0.  Both rate and
    t must be finite and non-negative.
    """
    if not (isinstance(rate, (int, float)) and math.isfinite(rate) and rate >= 0.0):
        raise ValueError(f"rate must be finite and >= 0, got {rate}")
    if not (isinstance(t, (int, float)) and math.isfinite(t) and t >= 0.0):
        raise ValueError(f"time must be finite and >= 0, got {t}")
    gamma = math.exp(-0.5 * rate * t)
    return DampingFactors(gamma=gamma, omega=math.sqrt(1.0 - gamma * gamma))


@dataclass(frozen=True)
class ChannelSpec:
    """A channel kind plus independent decay rates for qubits A and B."""

    kind: str
    rate_a: float = 1.0
    rate_b: float = 1.0

    def __post_init__(self) -> None:
        if self.kind not in CHANNEL_KINDS:
            raise ValueError(
                f"unknown channel kind {self.kind!r}; expected one of {list(CHANNEL_KINDS)}"
            )
        for name, rate in (("rate_a", self.rate_a), ("rate_b", self.rate_b)):
            if not (isinstance(rate, (int, float)) and math.isfinite(rate) and rate >= 0.0):
                raise ValueError(f"{name} must be finite and >= 0, got {rate}")


def _phase_factors_1q(factors: DampingFactors) -> list[np.ndarray]:
    """Single-qubit dephasing pair {diag(gamma, 1), diag(omega, 0)}.

    The pair is trace preserving and multiplies the qubit's off-diagonal
    element by gamma while leaving both populations alone.
    """
    gamma, omega = factors
    return [
        np.array([[gamma, 0.0], [0.0, 1.0]], dtype=complex),
        np.array([[omega, 0.0], [0.0, 0.0]], dtype=complex),
    ]


def _amplitude_factors_1q(factors: DampingFactors) -> list[np.ndarray]:
    """Single-qubit decay pair {diag(gamma, 1), omega |-><+|}.

    Upper-level population survives with weight gamma^2, the remainder lands
    in the lower level; the off-diagonal element shrinks by gamma.
    """
    gamma, omega = factors
    return [
        np.array([[gamma, 0.0], [0.0, 1.0]], dtype=complex),
        np.array([[0.0, 0.0], [omega, 0.0]], dtype=complex),
    ]


def kraus_equalizing_1q(factors: DampingFactors) -> list[np.ndarray]:
    """Single-qubit equalizing set of four operators.

    Halved copies of the decay pair act in both directions:

        G1 = diag(gamma, 1)/sqrt(2)    G2 = omega |-><+| / sqrt(2)
        G3 = diag(1, gamma)/sqrt(2)    G4 = omega |+><-| / sqrt(2)

    The set is trace preserving.  Populations perform a symmetric two-state
    mix, staying put with probability (1 + gamma^2)/2, and the off-diagonal
    element keeps the single factor gamma.
    """
    gamma, omega = factors
    h = 1.0 / math.sqrt(2.0)
    return [
        h * np.array([[gamma, 0.0], [0.0, 1.0]], dtype=complex),
        h * np.array([[0.0, 0.0], [omega, 0.0]], dtype=complex),
        h * np.array([[1.0, 0.0], [0.0, gamma]], dtype=complex),
        h * np.array([[0.0, omega], [0.0, 0.0]], dtype=complex),
    ]


def product_channel(
    ops_a: Sequence[np.ndarray], ops_b: Sequence[np.ndarray]
) -> list[np.ndarray]:
    """All pairwise tensor products of two single-qubit operator lists.

    If each input list is trace preserving on its own qubit, the product
    list is trace preserving on the pair.
    """
    return [kron(ka, kb) for ka in ops_a for kb in ops_b]


def kraus_phase(factors_a: DampingFactors, factors_b: DampingFactors) -> list[np.ndarray]:
    """Two-qubit dephasing set (4 operators)."""
    return product_channel(_phase_factors_1q(factors_a), _phase_factors_1q(factors_b))


def kraus_amplitude(factors_a: DampingFactors, factors_b: DampingFactors) -> list[np.ndarray]:
    """Two-qubit decay set (4 operators)."""
    return product_channel(_amplitude_factors_1q(factors_a), _amplitude_factors_1q(factors_b))


def kraus_equalizing(factors_a: DampingFactors, factors_b: DampingFactors) -> list[np.ndarray]:
    """Two-qubit equalizing set (16 operators)."""
    return product_channel(kraus_equalizing_1q(factors_a), kraus_equalizing_1q(factors_b))


def kraus_set(spec: ChannelSpec, t: float) -> list[np.ndarray]:
    """Kraus operators of the given channel after evolving for time t."""
    factors_a = damping(spec.rate_a, t)
    factors_b = damping(spec.rate_b, t)
    if spec.kind == "phase":
        return kraus_phase(factors_a, factors_b)
    if spec.kind == "amplitude":
        return kraus_amplitude(factors_a, factors_b)
    return kraus_equalizing(factors_a, factors_b)


def check_cptp(ops: Sequence[np.ndarray]) -> float:
    """Completeness residual max|sum_k K^+ K - I|, zero for a trace-preserving set."""
    if len(ops) == 0:
        raise ValueError("empty operator list")
    dim = np.asarray(ops[0]).shape[0]
    acc = np.zeros((dim, dim), dtype=complex)
    for k in ops:
        k = np.asarray(k, dtype=complex)
        acc += matmul(dagger(k), k)
    return inf_norm_diff(acc, np.eye(dim, dtype=complex))


def apply(rho: np.ndarray, ops: Sequence[np.ndarray]) -> np.ndarray:
    """Kraus sum sum_k K rho K^+.

    The operator list is rejected with ValueError if its completeness
    residual exceeds 1e-12, so a non-physical evolution cannot slip through
    silently.
    """
    residual = check_cptp(ops)
    if residual > _CPTP_REJECT_TOL:
        raise ValueError(f"Kraus set is not trace preserving (residual {residual:.3e})")
    rho = np.asarray(rho, dtype=complex)
    out = np.zeros_like(rho)
    for k in ops:
        k = np.asarray(k, dtype=complex)
        out += k @ rho @ dagger(k)
    return out


def propagate_x(state: XState, spec: ChannelSpec, t: float) -> XState:
    """Evolve an X state for time t, staying in the six-parameter form.

    phase uses its closed form for any rate pair.  amplitude and equalizing
    use closed forms when the two rates are equal and otherwise fall back to
    the dense Kraus sum; the X shape is preserved either way.
    """
    factors_a = damping(spec.rate_a, t)
    factors_b = damping(spec.rate_b, t)
    if spec.kind == "phase":
        shrink = factors_a.gamma * factors_b.gamma
        return XState(state.a, state.b, state.c, state.d, shrink * state.z, shrink * state.w)
    if spec.rate_a != spec.rate_b:
        return from_dense(apply(to_dense(state), kraus_set(spec, t)), tol=1e-10)
    g2 = factors_a.gamma * factors_a.gamma
    if spec.kind == "amplitude":
        o2 = factors_a.omega * factors_a.omega
        a = g2 * g2 * state.a
        b = g2 * (state.b + o2 * state.a)
        c = g2 * (state.c + o2 * state.a)
        d = 1.0 - a - b - c
        return XState(a, b, c, d, g2 * state.z, g2 * state.w)
    # equalizing: each qubit keeps its level with probability (1 + g2)/2
    stay = 0.5 * (1.0 + g2)
    flip = 0.5 * (1.0 - g2)
    ss = stay * stay
    sf = stay * flip
    ff = flip * flip
    a = ss * state.a + sf * (state.b + state.c) + ff * state.d
    b = ss * state.b + sf * (state.a + state.d) + ff * state.c
    c = ss * state.c + sf * (state.a + state.d) + ff * state.b
    d = ss * state.d + sf * (state.b + state.c) + ff * state.a
    return XState(a, b, c, d, g2 * state.z, g2 * state.w)


def x_form_residual(rho: np.ndarray) -> float:
    """Largest magnitude outside the diagonal and anti-diagonal positions."""
    rho = np.asarray(rho, dtype=complex)
    return max(abs(complex(rho[i, j])) for i, j in OFF_X_POSITIONS)
