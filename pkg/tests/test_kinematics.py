"""Four-momentum algebra, boost matrices and rapidity conversions."""

import math

import numpy as np
import pytest

from relbell.kinematics import (
    ETA,
    BoostSpec,
    FourMomentum,
    X_HAT,
    Z_HAT,
    apply_boost,
    boost_matrix,
    lorentz_inverse,
    minkowski_defect,
    rapidity_from_beta,
    standard_boost,
    unit3,
)


def _unit(rng):
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def _rotation_about_z(theta):
    c, s = math.cos(theta), math.sin(theta)
    r = np.eye(4)
    r[0, 0] = r[1, 1] = c
    r[0, 1], r[1, 0] = -s, s
    return r


class TestFourMomentum:
    def test_rest(self):
        p = FourMomentum.rest(2.0)
        assert p.E == 2.0 and p.p_mag == 0.0 and p.gamma == 1.0
        np.testing.assert_array_equal(p.four_vector, [0, 0, 0, 2.0])

    def test_from_spatial_on_shell(self):
        p = FourMomentum.from_spatial([3.0, 0.0, 4.0], m=1.0)
        assert p.E == pytest.approx(math.sqrt(26.0), rel=1e-15)

    def test_along_z(self):
        p = FourMomentum.along_z(10.0)
        assert p.E == 10.0
        assert p.p[2] == pytest.approx(math.sqrt(99.0), rel=1e-15)
        assert p.rapidity == pytest.approx(math.acosh(10.0), rel=1e-15)

    def test_off_shell_rejected(self):
        with pytest.raises(ValueError, match="mass shell"):
            FourMomentum(np.array([1.0, 0.0, 0.0]), 5.0, 1.0)

    def test_unphysical_rejected(self):
        with pytest.raises(ValueError, match="mass must be positive"):
            FourMomentum(np.zeros(3), 1.0, -1.0)
        with pytest.raises(ValueError, match="below rest mass"):
            FourMomentum(np.zeros(3), 0.5, 1.0)
        with pytest.raises(ValueError, match="finite"):
            FourMomentum(np.array([np.inf, 0, 0]), 1.0, 1.0)

    def test_parity_flips_spatial_part(self):
        p = FourMomentum.from_spatial([1.0, -2.0, 0.5])
        q = p.parity()
        np.testing.assert_array_equal(q.p, -p.p)
        assert q.E == p.E and q.m == p.m

    def test_direction_undefined_at_rest(self):
        with pytest.raises(ValueError, match="at rest"):
            FourMomentum.rest().direction()


class TestBoostSpec:
    def test_derived_fields_consistent(self):
        b = BoostSpec(X_HAT, 0.6)
        assert b.gamma == pytest.approx(1.25, rel=1e-15)
        assert math.cosh(b.alpha) == pytest.approx(b.gamma, rel=1e-12)
        assert math.sinh(b.alpha) == pytest.approx(b.gamma * b.beta, rel=1e-12)

    def test_beta_range_enforced(self):
        with pytest.raises(ValueError, match=r"\[0, 1\)"):
            BoostSpec(X_HAT, 1.0)
        with pytest.raises(ValueError, match=r"\[0, 1\)"):
            BoostSpec(X_HAT, -0.2)

    def test_direction_must_be_unit(self):
        with pytest.raises(ValueError, match="unit vector"):
            BoostSpec(np.array([1.0, 1.0, 0.0]), 0.3)

    def test_from_rapidity_signed(self):
        b = BoostSpec.from_rapidity(Z_HAT, -0.7)
        np.testing.assert_array_equal(b.e, -Z_HAT)
        assert b.alpha == pytest.approx(0.7, rel=1e-12)

    def test_inverse_round_trip(self):
        b = BoostSpec(_unit(np.random.default_rng(2)), 0.85)
        assert np.max(np.abs(boost_matrix(b) @ boost_matrix(b.inverse()) - np.eye(4))) < 1e-10


class TestBoostMatrix:
    def test_identity_at_zero_speed(self):
        np.testing.assert_array_equal(boost_matrix(BoostSpec(X_HAT, 0.0)), np.eye(4))

    def test_x_boost_entries_at_beta_06(self):
        # gamma = 1.25, gamma*beta = 0.75
        L = boost_matrix(BoostSpec(X_HAT, 0.6))
        assert L[3, 3] == pytest.approx(1.25, rel=1e-15)
        assert L[0, 3] == pytest.approx(0.75, rel=1e-15)
        assert L[3, 0] == pytest.approx(0.75, rel=1e-15)
        assert L[0, 0] == pytest.approx(1.25, rel=1e-15)
        np.testing.assert_array_equal(L[1:3, 1:3], np.eye(2))
        assert minkowski_defect(L) < 1e-15

    def test_z_boost_commutes_with_z_rotations(self):
        L = boost_matrix(BoostSpec(Z_HAT, 0.7))
        R = _rotation_about_z(0.9)
        assert np.max(np.abs(L @ R - R @ L)) < 1e-15

    def test_minkowski_orthogonality_random(self):
        rng = np.random.default_rng(4)
        for _ in range(300):
            b = BoostSpec(_unit(rng), rng.uniform(0, 0.999))
            assert minkowski_defect(boost_matrix(b)) < 1e-10

    def test_symmetric(self):
        rng = np.random.default_rng(8)
        L = boost_matrix(BoostSpec(_unit(rng), 0.9))
        np.testing.assert_allclose(L, L.T, atol=1e-15)


class TestApplyBoost:
    def test_identity_matrix(self):
        p = FourMomentum.from_spatial([0.3, -0.2, 1.1])
        q = apply_boost(np.eye(4), p)
        np.testing.assert_array_equal(q.four_vector, p.four_vector)

    def test_rest_particle_gains_rapidity(self):
        alpha = 0.9
        b = BoostSpec.from_rapidity(X_HAT, alpha)
        q = apply_boost(boost_matrix(b), FourMomentum.rest(2.0))
        np.testing.assert_allclose(
            q.four_vector,
            [2.0 * math.sinh(alpha), 0.0, 0.0, 2.0 * math.cosh(alpha)],
            atol=1e-14,
        )

    def test_transverse_momentum_kept(self):
        # momentum along z, boost along x: spatial part becomes (E sinh a, 0, p)
        p = FourMomentum.along_z(10.0)
        b = BoostSpec(X_HAT, 0.6)
        q = apply_boost(boost_matrix(b), p)
        direct = boost_matrix(b) @ p.four_vector  # independent 4x4 multiply
        np.testing.assert_allclose(q.four_vector, direct, atol=0)
        np.testing.assert_allclose(
            q.p, [10.0 * math.sinh(b.alpha), 0.0, p.p[2]], atol=1e-12
        )

    def test_mass_shell_preserved_random(self):
        rng = np.random.default_rng(9)
        for _ in range(300):
            r = math.exp(rng.uniform(0, math.log(1e4)))
            p = FourMomentum.from_spatial(math.sqrt(r * r - 1.0) * _unit(rng))
            b = BoostSpec(_unit(rng), rng.uniform(0, 0.999))
            q = apply_boost(boost_matrix(b), p)
            assert abs(q.E**2 - q.p_mag**2 - 1.0) <= 1e-9 * max(q.E**2, 1.0)


class TestStandardBoost:
    def test_identity_at_rest(self):
        np.testing.assert_array_equal(standard_boost(FourMomentum.rest()), np.eye(4))

    def test_z_momentum_matches_z_boost(self):
        p = FourMomentum.along_z(10.0)
        expected = boost_matrix(BoostSpec.from_rapidity(Z_HAT, math.acosh(10.0)))
        assert np.max(np.abs(standard_boost(p) - expected)) < 1e-12

    def test_maps_rest_to_p_random(self):
        rng = np.random.default_rng(10)
        for _ in range(300):
            r = math.exp(rng.uniform(0, math.log(1e3)))
            p = FourMomentum.from_spatial(math.sqrt(r * r - 1.0) * _unit(rng))
            mapped = apply_boost(standard_boost(p), FourMomentum.rest(p.m))
            assert np.max(np.abs(mapped.four_vector - p.four_vector)) < 1e-10 * max(p.E, 1.0)


class TestRapidity:
    def test_zero(self):
        assert rapidity_from_beta(0.0) == 0.0

    def test_beta_06(self):
        assert math.cosh(rapidity_from_beta(0.6)) == pytest.approx(1.25, rel=1e-13)

    def test_beta_099(self):
        gamma = 1.0 / math.sqrt(1.0 - 0.99**2)
        assert gamma == pytest.approx(7.088812050083354, rel=1e-15)
        a = rapidity_from_beta(0.99)
        assert math.cosh(a) == pytest.approx(gamma, rel=1e-13)
        assert math.sinh(a) == pytest.approx(gamma * 0.99, rel=1e-13)

    def test_range_enforced(self):
        for bad in (-0.1, 1.0, 1.5):
            with pytest.raises(ValueError):
                rapidity_from_beta(bad)


class TestHelpers:
    def test_lorentz_inverse(self):
        rng = np.random.default_rng(12)
        L = boost_matrix(BoostSpec(_unit(rng), 0.95))
        assert np.max(np.abs(lorentz_inverse(L) @ L - np.eye(4))) < 1e-10

    def test_eta_signature(self):
        np.testing.assert_array_equal(np.diag(ETA), [1.0, 1.0, 1.0, -1.0])

    def test_unit3_validation(self):
        with pytest.raises(ValueError, match="unit vector"):
            unit3([0.5, 0.5, 0.5])
        v = unit3([0.0, 1.0, 0.0])
        assert not v.flags.writeable
