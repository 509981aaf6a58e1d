"""Relativistic spin-1/2 entanglement toolkit.

Wigner rotations of massive spin-1/2 states under Lorentz boosts, the
transformation of momentum-conserved Bell pairs between inertial frames,
and CHSH Bell observables built from boost-corrected spin operators.

Conventions used throughout: natural units (c = 1), four-vectors ordered
(x, y, z, t) with metric diag(+1, +1, +1, -1), and the two-spin basis
ordered (++, +-, -+, --).
"""

from relbell.linalg import pauli, sigma_dot, tensor, exp2
from relbell.kinematics import (
    ETA,
    X_HAT,
    Y_HAT,
    Z_HAT,
    FourMomentum,
    BoostSpec,
    boost_matrix,
    apply_boost,
    standard_boost,
    rapidity_from_beta,
    lorentz_inverse,
)
from relbell.wigner import (
    WignerRotation,
    d_half_pure_boost,
    d_half_standard,
    d_half_exponential,
    little_group_closed,
    little_group_oracle,
    little_group_lorentz,
    rotation_angle,
    wigner_angle,
    wigner_su2_special,
)
from relbell.bell import (
    BASIS_LABELS,
    TwoQubitState,
    BellCoefficients,
    bell_state,
    boost_two_particle,
    bell_decompose,
    dump_state,
)
from relbell.observables import (
    SpinObservable,
    ChshSettings,
    CASE1_SETTINGS,
    CASE2_SETTINGS,
    REST_OPTIMAL_SETTINGS,
    rel_spin_observable,
    joint_expectation,
    expectation_case1_closed,
    expectation_case2_closed,
    chsh,
    chsh_case1_closed,
    chsh_universal,
)
from relbell.optimizer import OptimizationResult, maximize_chsh

__version__ = "0.1.0"

__all__ = [
    "pauli", "sigma_dot", "tensor", "exp2",
    "ETA", "X_HAT", "Y_HAT", "Z_HAT",
    "FourMomentum", "BoostSpec", "boost_matrix", "apply_boost",
    "standard_boost", "rapidity_from_beta", "lorentz_inverse",
    "WignerRotation", "d_half_pure_boost", "d_half_standard",
    "d_half_exponential", "little_group_closed", "little_group_oracle",
    "little_group_lorentz", "rotation_angle", "wigner_angle",
    "wigner_su2_special",
    "BASIS_LABELS", "TwoQubitState", "BellCoefficients", "bell_state",
    "boost_two_particle", "bell_decompose", "dump_state",
    "SpinObservable", "ChshSettings", "CASE1_SETTINGS", "CASE2_SETTINGS",
    "REST_OPTIMAL_SETTINGS", "rel_spin_observable", "joint_expectation",
    "expectation_case1_closed", "expectation_case2_closed", "chsh",
    "chsh_case1_closed", "chsh_universal",
    "OptimizationResult", "maximize_chsh",
]
