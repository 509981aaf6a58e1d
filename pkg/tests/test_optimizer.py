"""CHSH maximization: recovery of known optima, dominance, determinism."""

import math

import numpy as np
import pytest

from relbell.bell import bell_state, boost_two_particle
from relbell.kinematics import BoostSpec, FourMomentum, X_HAT
from relbell.observables import REST_OPTIMAL_SETTINGS, TSIRELSON_BOUND, chsh
from relbell.optimizer import maximize_chsh

STATES = ("00", "01", "10", "11")


def _boosted(state, beta, e_over_m=10.0):
    s = bell_state(int(state[0]), int(state[1]), FourMomentum.along_z(e_over_m))
    if beta == 0.0:
        return s
    return boost_two_particle(s, BoostSpec(X_HAT, beta))


class TestRestRecovery:
    @pytest.mark.parametrize("state", STATES)
    def test_reaches_tsirelson_at_rest(self, state):
        res = maximize_chsh(_boosted(state, 0.0), 0.0, X_HAT, restarts=8, seed=7)
        assert res.value == pytest.approx(2.0 * math.sqrt(2.0), abs=1e-6)
        assert res.restarts_used == 8

    def test_value_consistent_with_public_path(self):
        res = maximize_chsh(_boosted("10", 0.6), 0.6, X_HAT, restarts=8, seed=3)
        reevaluated = chsh(_boosted("10", 0.6), res.settings, 0.6, X_HAT)
        assert reevaluated == pytest.approx(res.value, abs=1e-10)


class TestDominance:
    @pytest.mark.parametrize("beta", [0.0, 0.4, 0.8])
    def test_beats_fixed_settings(self, beta):
        s = _boosted("10", beta)
        res = maximize_chsh(s, beta, X_HAT, restarts=8, seed=11)
        baseline = chsh(s, REST_OPTIMAL_SETTINGS["10"], beta, X_HAT)
        assert res.value >= baseline - 1e-6

    def test_never_exceeds_tsirelson(self):
        rng = np.random.default_rng(13)
        for beta in (0.0, 0.5, 0.9):
            res = maximize_chsh(_boosted("00", beta), beta, X_HAT, restarts=4,
                                seed=int(rng.integers(1 << 31)))
            assert res.value <= TSIRELSON_BOUND + 1e-6


class TestDeterminism:
    def test_identical_runs_identical_results(self):
        kwargs = dict(restarts=6, tol=1e-9, seed=42)
        a = maximize_chsh(_boosted("00", 0.5), 0.5, X_HAT, **kwargs)
        b = maximize_chsh(_boosted("00", 0.5), 0.5, X_HAT, **kwargs)
        assert a.value == b.value
        assert a.iterations == b.iterations
        assert a.converged == b.converged
        np.testing.assert_array_equal(a.settings.a, b.settings.a)
        np.testing.assert_array_equal(a.settings.a_prime, b.settings.a_prime)
        np.testing.assert_array_equal(a.settings.b, b.settings.b)
        np.testing.assert_array_equal(a.settings.b_prime, b.settings.b_prime)

    def test_different_seeds_may_differ_but_agree_on_value(self):
        a = maximize_chsh(_boosted("10", 0.0), 0.0, X_HAT, restarts=8, seed=1)
        b = maximize_chsh(_boosted("10", 0.0), 0.0, X_HAT, restarts=8, seed=2)
        assert a.value == pytest.approx(b.value, abs=1e-6)


class TestValidation:
    def test_beta_range(self):
        with pytest.raises(ValueError, match="beta"):
            maximize_chsh(_boosted("10", 0.0), 1.0, X_HAT)

    def test_restarts_positive(self):
        with pytest.raises(ValueError, match="restarts"):
            maximize_chsh(_boosted("10", 0.0), 0.0, X_HAT, restarts=0)

    def test_tol_positive(self):
        with pytest.raises(ValueError, match="tol"):
            maximize_chsh(_boosted("10", 0.0), 0.0, X_HAT, tol=0.0)

    def test_convergence_flag_reports_budget_exhaustion(self):
        res = maximize_chsh(_boosted("10", 0.0), 0.0, X_HAT,
                            restarts=1, max_iterations=3, seed=5)
        assert res.converged is False
