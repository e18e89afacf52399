"""Two-qubit X states under local Markovian noise.

Exact evolution of X-form density matrices under phase damping, amplitude
damping, and population-equalizing channels built from per-qubit Kraus
operators, Wootters concurrence, and root finders for the time where
entanglement dies and for the fidelity where sudden death first appears.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .channels import (
    CHANNEL_KINDS,
    ChannelSpec,
    DampingFactors,
    apply,
    check_cptp,
    damping,
    kraus_amplitude,
    kraus_equalizing,
    kraus_equalizing_1q,
    kraus_phase,
    kraus_set,
    product_channel,
    propagate_x,
    x_form_residual,
)
from .entanglement import (
    ALIVE,
    DIES,
    SEPARABLE,
    EsdResult,
    concurrence_general,
    concurrence_x,
    critical_fidelity_amplitude,
    critical_fidelity_numeric,
    esd_time_amplitude_phi_werner,
    esd_time_numeric,
    esd_time_phase_werner,
)
from .linalg import (
    NumericalFailureError,
    dagger,
    eig_spectrum,
    inf_norm_diff,
    kron,
    matmul,
)
from .states import (
    LocalUnitary,
    NotXStateError,
    StateDiagnostics,
    XState,
    apply_local_unitary,
    flip_a_unitary,
    from_dense,
    random_local_unitary,
    random_x_state,
    to_dense,
    validate,
    werner_phi,
    werner_psi,
)
from .verify import CheckResult, run_all

__all__ = [
    "__version__",
    "CHANNEL_KINDS",
    "ChannelSpec",
    "DampingFactors",
    "apply",
    "check_cptp",
    "damping",
    "kraus_amplitude",
    "kraus_equalizing",
    "kraus_equalizing_1q",
    "kraus_phase",
    "kraus_set",
    "product_channel",
    "propagate_x",
    "x_form_residual",
    "ALIVE",
    "DIES",
    "SEPARABLE",
    "EsdResult",
    "concurrence_general",
    "concurrence_x",
    "critical_fidelity_amplitude",
    "critical_fidelity_numeric",
    "esd_time_amplitude_phi_werner",
    "esd_time_numeric",
    "esd_time_phase_werner",
    "NumericalFailureError",
    "dagger",
    "eig_spectrum",
    "inf_norm_diff",
    "kron",
    "matmul",
    "LocalUnitary",
    "NotXStateError",
    "StateDiagnostics",
    "XState",
    "apply_local_unitary",
    "flip_a_unitary",
    "from_dense",
    "random_local_unitary",
    "random_x_state",
    "to_dense",
    "validate",
    "werner_phi",
    "werner_psi",
    "CheckResult",
    "run_all",
]
