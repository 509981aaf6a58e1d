"""Relativistic spin observables and CHSH Bell combinations.

The boost-corrected spin observable along a unit direction a, for an
observer moving with speed beta along e, is

    a_hat = (sqrt(1-beta^2) a_perp + a_par) . sigma
            / sqrt(1 + beta^2 [(e.a)^2 - 1])

with a split into components parallel and perpendicular to e.  The
denominator is exactly the norm of the numerator's vector, so a_hat is
Hermitian, traceless and squares to the identity: a genuine +-1 observable
for every beta in [0, 1] (at beta = 1 it degenerates unless e.a != 0).

Closed-form joint expectations are provided for the z-momentum / x-boost
geometry, one for each sector of the Bell family:

* ``expectation_case1_closed`` -- the {00, 11} sector, which the boost
  rotates by the Wigner angle Omega, giving correlations in cos/sin(2 Omega);
* ``expectation_case2_closed`` -- the {01, 10} sector, which keeps its form.

Both are duplicated by the brute-force matrix element in
``joint_expectation``, which is the path all tests compare against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from relbell.bell import TwoQubitState
from relbell.kinematics import unit3
from relbell.linalg import IDENTITY2, max_abs_diff, sigma_dot, tensor

_OBS_TOL = 1e-12

#: |CHSH| never exceeds 2*sqrt(2) for +-1 observables (Tsirelson).
TSIRELSON_BOUND = 2.0 * math.sqrt(2.0)


def _observable_vector(a: np.ndarray, beta: float, e: np.ndarray) -> np.ndarray:
    """Effective Bloch vector of the boost-corrected observable (unit norm)."""
    par = float(a @ e) * e
    perp = a - par
    num = math.sqrt(1.0 - beta * beta) * perp + par
    den2 = 1.0 + beta * beta * (float(a @ e) ** 2 - 1.0)
    if den2 <= 0.0:
        raise ValueError(
            "observable undefined: direction perpendicular to the boost at beta = 1"
        )
    return num / math.sqrt(den2)


@dataclass(frozen=True)
class SpinObservable:
    """A +-1 spin observable: 2x2 Hermitian traceless matrix squaring to I."""

    m: np.ndarray
    direction: np.ndarray
    beta: float
    e: np.ndarray

    def __post_init__(self):
        m = np.array(self.m, dtype=complex)
        m.setflags(write=False)
        object.__setattr__(self, "m", m)
        if max_abs_diff(m, np.conj(m).T) > _OBS_TOL:
            raise ValueError("observable must be Hermitian")
        if abs(m[0, 0] + m[1, 1]) > _OBS_TOL:
            raise ValueError("observable must be traceless")
        if max_abs_diff(m @ m, IDENTITY2) > _OBS_TOL:
            raise ValueError("observable must square to the identity")


@dataclass(frozen=True)
class ChshSettings:
    """The four measurement directions of a CHSH run."""

    a: np.ndarray
    a_prime: np.ndarray
    b: np.ndarray
    b_prime: np.ndarray

    def __post_init__(self):
        for name in ("a", "a_prime", "b", "b_prime"):
            object.__setattr__(self, name, unit3(getattr(self, name), name))


def rel_spin_observable(direction, beta: float, e) -> SpinObservable:
    """Boost-corrected spin observable for measurement direction ``direction``.

    Reduces to sigma.a at beta = 0, and for directions parallel or
    perpendicular to the boost axis the correction cancels entirely.  Valid
    for beta in [0, 1]; at beta = 1 the direction must not be orthogonal to
    the boost.
    """
    a = unit3(direction, "measurement direction")
    e = unit3(e, "boost direction")
    if not 0.0 <= beta <= 1.0:
        raise ValueError(f"beta must lie in [0, 1], got {beta}")
    vec = _observable_vector(a, beta, e)
    return SpinObservable(m=sigma_dot(vec), direction=a, beta=float(beta), e=e)


def joint_expectation(s: TwoQubitState, A: SpinObservable, B: SpinObservable) -> float:
    """<amps| A (x) B |amps> on the normalized spin sector (kin_factor ignored)."""
    val = complex(np.vdot(s.amps, tensor(A.m, B.m) @ s.amps))
    if abs(val.imag) > 1e-12:
        raise ArithmeticError(f"joint expectation not real: {val!r}")
    return val.real


def chsh(s: TwoQubitState, c: ChshSettings, beta: float, e) -> float:
    """CHSH combination <ab> + <ab'> + <a'b> - <a'b'> with boost-corrected observables."""
    A = rel_spin_observable(c.a, beta, e)
    Ap = rel_spin_observable(c.a_prime, beta, e)
    B = rel_spin_observable(c.b, beta, e)
    Bp = rel_spin_observable(c.b_prime, beta, e)
    return (joint_expectation(s, A, B) + joint_expectation(s, A, Bp)
            + joint_expectation(s, Ap, B) - joint_expectation(s, Ap, Bp))


def expectation_case1_closed(a, b, beta: float, omega: float) -> float:
    """Closed-form <a_hat (x) b_hat> on the boosted correlated pair (00 sector).

    Geometry: pair momentum along z, boost along x, ``omega`` the Wigner
    angle of the boost.  The state rotates into the 11 sector by omega, so
    correlations oscillate at 2*omega:

        { [ax bx + (1-b^2) az bz] cos(2w) - (1-b^2) ay by
          - sqrt(1-b^2) (az bx - bz ax) sin(2w) } / (Na Nb)

    with Na = sqrt(1 + b^2 (ax^2 - 1)) and likewise Nb.
    """
    a = unit3(a, "a")
    b3 = unit3(b, "b")
    if not 0.0 <= beta <= 1.0:
        raise ValueError(f"beta must lie in [0, 1], got {beta}")
    b2 = beta * beta
    na = math.sqrt(1.0 + b2 * (a[0] ** 2 - 1.0))
    nb = math.sqrt(1.0 + b2 * (b3[0] ** 2 - 1.0))
    num = ((a[0] * b3[0] + (1.0 - b2) * a[2] * b3[2]) * math.cos(2.0 * omega)
           - (1.0 - b2) * a[1] * b3[1]
           - math.sqrt(1.0 - b2) * (a[2] * b3[0] - b3[2] * a[0]) * math.sin(2.0 * omega))
    return num / (na * nb)


def expectation_case2_closed(a, b, beta: float) -> float:
    """Closed-form <a_hat (x) b_hat> on the boosted exchange-symmetric pair (10 sector).

    The boost leaves this state's form invariant, so no Wigner angle enters:

        [ax bx + (1-b^2)(ay by - az bz)] / (Na Nb).
    """
    a = unit3(a, "a")
    b3 = unit3(b, "b")
    if not 0.0 <= beta <= 1.0:
        raise ValueError(f"beta must lie in [0, 1], got {beta}")
    b2 = beta * beta
    na = math.sqrt(1.0 + b2 * (a[0] ** 2 - 1.0))
    nb = math.sqrt(1.0 + b2 * (b3[0] ** 2 - 1.0))
    return (a[0] * b3[0] + (1.0 - b2) * (a[1] * b3[1] - a[2] * b3[2])) / (na * nb)


def chsh_case1_closed(beta: float, omega: float) -> float:
    """CHSH curve of the boosted correlated pair at its rest-frame-optimal settings.

    (2 / sqrt(2 - beta^2)) (sqrt(1 - beta^2) + cos(2 omega)); follows from
    ``expectation_case1_closed`` at the CASE1 settings.  Equals the
    universal curve only when omega = 0.
    """
    if not 0.0 <= beta <= 1.0:
        raise ValueError(f"beta must lie in [0, 1], got {beta}")
    return (2.0 / math.sqrt(2.0 - beta * beta)) * (
        math.sqrt(1.0 - beta * beta) + math.cos(2.0 * omega))


def chsh_universal(beta: float) -> float:
    """The state-independent CHSH curve of the form-invariant sector.

    (2 / sqrt(2 - beta^2)) (1 + sqrt(1 - beta^2)): 2*sqrt(2) at beta = 0,
    exactly 2 at beta = 1, strictly decreasing in between.
    """
    if not 0.0 <= beta <= 1.0:
        raise ValueError(f"beta must lie in [0, 1], got {beta}")
    return (2.0 / math.sqrt(2.0 - beta * beta)) * (1.0 + math.sqrt(1.0 - beta * beta))


_S2 = 1.0 / math.sqrt(2.0)

#: Rest-frame-optimal settings for the correlated pair (00): y-anticorrelated.
CASE1_SETTINGS = ChshSettings(
    a=np.array([_S2, -_S2, 0.0]),
    a_prime=np.array([-_S2, -_S2, 0.0]),
    b=np.array([0.0, 1.0, 0.0]),
    b_prime=np.array([1.0, 0.0, 0.0]),
)

#: Rest-frame-optimal settings for the exchange-symmetric pair (10): y-correlated.
CASE2_SETTINGS = ChshSettings(
    a=np.array([_S2, _S2, 0.0]),
    a_prime=np.array([-_S2, _S2, 0.0]),
    b=np.array([0.0, 1.0, 0.0]),
    b_prime=np.array([1.0, 0.0, 0.0]),
)

#: Settings reaching 2*sqrt(2) at beta = 0 for each Bell state, all drawn
#: from the same xy-plane family (b along y, b' along x).
REST_OPTIMAL_SETTINGS = {
    "00": CASE1_SETTINGS,
    "01": ChshSettings(
        a=np.array([-_S2, _S2, 0.0]),
        a_prime=np.array([_S2, _S2, 0.0]),
        b=np.array([0.0, 1.0, 0.0]),
        b_prime=np.array([1.0, 0.0, 0.0]),
    ),
    "10": CASE2_SETTINGS,
    "11": ChshSettings(
        a=np.array([-_S2, -_S2, 0.0]),
        a_prime=np.array([_S2, -_S2, 0.0]),
        b=np.array([0.0, 1.0, 0.0]),
        b_prime=np.array([1.0, 0.0, 0.0]),
    ),
}
