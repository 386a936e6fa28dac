import math

import mpmath as mp
import numpy as np
import pytest
import scipy.special as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from spheregreen.errors import ConvergenceError, DomainError, RepresentationError
from spheregreen.specfun import (assoc_legendre_P, carlson_rc, carlson_rd, carlson_rf, carlson_rj,
                                 chebyshev_T, elliptic_E, elliptic_F, elliptic_K, elliptic_Pi,
                                 ferrers_P, ferrers_Q, ferrers_Q_diagonal, gauss_2F1,
                                 gegenbauer_C, hyp2f1_regularized, legendre_P, pochhammer, rgamma)
from spheregreen.verify import check_wronskian


# --- elliptic integrals --------------------------------------------------

@pytest.mark.parametrize("x,y,z", [(0.5, 1.0, 1.5), (1e-8, 2.0, 3.0), (1.0, 1.0, 1.0), (0.0, 0.3, 4.0)])
def test_carlson_rf_rd_against_scipy(x, y, z):
    assert carlson_rf(x, y, z) == pytest.approx(sp.elliprf(x, y, z), rel=1e-14)
    assert carlson_rd(x, y, z) == pytest.approx(sp.elliprd(x, y, z), rel=1e-14)


@pytest.mark.parametrize("p", [0.2, 1.5, -0.4, -2.0])
def test_carlson_rj_against_scipy(p):
    assert carlson_rj(0.5, 1.0, 1.5, p) == pytest.approx(sp.elliprj(0.5, 1.0, 1.5, p), rel=1e-13)


@pytest.mark.parametrize("x,y", [(0.0, 1.0), (2.0, 1.0), (0.5, 3.0), (1.0, -0.5)])
def test_carlson_rc_against_scipy(x, y):
    assert carlson_rc(x, y) == pytest.approx(sp.elliprc(x, y), rel=1e-14)


@given(st.floats(0.0, 0.999))
@settings(max_examples=60, deadline=None)
def test_complete_integrals_against_scipy(k):
    assert elliptic_K(k) == pytest.approx(sp.ellipk(k * k), rel=1e-14)
    assert elliptic_E(k) == pytest.approx(sp.ellipe(k * k), rel=1e-14)


@pytest.mark.parametrize("alpha2,k", [(0.0, 0.5), (0.3, 0.6), (0.8, 0.95), (0.05, 0.1)])
def test_elliptic_pi_against_mpmath(alpha2, k):
    ref = float(mp.ellippi(mp.mpf(alpha2), mp.mpf(k) ** 2))
    assert elliptic_Pi(alpha2, k) == pytest.approx(ref, rel=1e-14)


def test_incomplete_F_reduces_to_K():
    assert elliptic_F(math.pi / 2, 0.7) == pytest.approx(elliptic_K(0.7), rel=1e-15)
    assert elliptic_F(0.4, 0.7) == pytest.approx(sp.ellipkinc(0.4, 0.49), rel=1e-14)


def test_elliptic_domain_errors():
    with pytest.raises(DomainError):
        elliptic_K(1.0)
    with pytest.raises(DomainError):
        elliptic_Pi(-0.1, 0.5)


# --- hypergeometric ------------------------------------------------------

@pytest.mark.parametrize("a,b,c,z", [
    (0.5, 1.5, 2.5, 0.7), (1.0, 1.0, 2.0, -0.5), (0.5, 2.0, 1.5, 0.95), (-3.0, 2.5, 1.5, 0.4),
    (1.5, 0.5, 2.0, 0.999), (2.0, 3.0, 5.0, -0.9),
])
def test_gauss_2F1_against_mpmath(a, b, c, z):
    assert gauss_2F1(a, b, c, z) == pytest.approx(float(mp.hyp2f1(a, b, c, z)), rel=1e-12)


def test_gauss_2F1_outside_unit_disc():
    with pytest.raises(ConvergenceError):
        gauss_2F1(2.0, 3.0, 5.0, -3.0)


def test_regularized_2F1_at_nonpositive_c():
    # F(a, b; -n; z) / Gamma(-n) = (a)_{n+1} (b)_{n+1} z^{n+1} / (n+1)! F(a+n+1, b+n+1; n+2; z);
    # for a, b, n = 1, 2, 1 the last factor is (1 - z)^-4.
    ref = 2.0 * 6.0 / 2.0 * 0.3 ** 2 / 0.7 ** 4
    assert hyp2f1_regularized(1.0, 2.0, -1.0, 0.3) == pytest.approx(ref, rel=1e-12)


def test_pochhammer_and_rgamma():
    assert pochhammer(0.5, 3) == pytest.approx(0.5 * 1.5 * 2.5)
    assert pochhammer(-2.0, 3) == 0.0
    assert rgamma(-2.0) == 0.0
    assert rgamma(4.0) == pytest.approx(1.0 / 6.0)


# --- polynomials ---------------------------------------------------------

@pytest.mark.parametrize("l", [0, 1, 2, 5, 11])
@pytest.mark.parametrize("mu", [0.5, 1.0, 1.5, 3.0])
def test_gegenbauer_against_scipy(l, mu):
    for x in (-0.9, -0.2, 0.35, 1.0):
        assert gegenbauer_C(l, mu, x) == pytest.approx(sp.eval_gegenbauer(l, mu, x), rel=1e-13, abs=1e-14)


def test_gegenbauer_half_is_legendre():
    for x in np.linspace(-1, 1, 7):
        assert gegenbauer_C(6, 0.5, x) == pytest.approx(legendre_P(6, x), abs=1e-14)


def test_chebyshev_and_assoc_legendre():
    assert chebyshev_T(5, 0.3) == pytest.approx(math.cos(5 * math.acos(0.3)))
    for l in range(6):
        for m in range(l + 1):
            assert assoc_legendre_P(l, m, 0.3) == pytest.approx(sp.lpmv(m, l, 0.3), rel=1e-13, abs=1e-15)


# --- Ferrers functions ---------------------------------------------------

FERRERS_CASES = [
    (0.5, -0.5), (0.5, 1.5), (0.5, -3.5), (0.5, 6.5), (1.0, -1.0), (1.0, 3.0), (1.0, -4.0),
    (1.5, -1.5), (1.5, 2.5), (1.5, -5.5), (2.0, 2.0), (2.0, -6.0), (0.3, 0.7), (2.5, -0.25),
]


@pytest.mark.parametrize("nu,mu", FERRERS_CASES)
@pytest.mark.parametrize("x", [-0.85, -0.3, 0.1, 0.6, 0.97])
def test_ferrers_P_against_mpmath(nu, mu, x):
    ref = float(mp.legenp(nu, mu, mp.mpf(x), type=2))
    assert ferrers_P((nu, mu), x) == pytest.approx(ref, rel=1e-11, abs=1e-14)


@pytest.mark.parametrize("nu,mu", [(1.0, -1.0), (1.0, 1.0), (1.0, 5.0), (2.0, 2.0), (2.0, 8.0),
                                   (0.5, -0.5), (1.5, -1.5), (0.5, 1.5), (1.5, 2.5), (2.0, -1.0)])
@pytest.mark.parametrize("x", [-0.85, -0.3, 0.1, 0.6, 0.97])
def test_ferrers_Q_against_mpmath(nu, mu, x):
    ref = float(mp.legenq(nu, mu, mp.mpf(x), type=2))
    assert ferrers_Q((nu, mu), x) == pytest.approx(ref, rel=1e-11, abs=1e-14)


def test_ferrers_Q11_at_04():
    ref = float(mp.legenq(1, 1, mp.mpf("0.4"), type=2))
    assert ferrers_Q((1, 1), 0.4) == pytest.approx(ref, rel=1e-14)


@given(st.sampled_from([0.5, 1.0, 1.5, 2.0, 2.5]), st.floats(-0.95, 0.95))
@settings(max_examples=60, deadline=None)
def test_diagonal_fast_path_matches_general_route(nu, x):
    fast = ferrers_Q((nu, -nu), x)
    slow = ferrers_Q((nu, -nu), x, fast_path=False)
    assert fast == pytest.approx(slow, rel=1e-10, abs=1e-13)
    assert fast == pytest.approx(ferrers_Q_diagonal(nu, x), rel=1e-15)


def test_ferrers_sign_convention_matches_integer_case():
    # the (-1)^m factor is built in: P_1^1(x) = -sqrt(1 - x^2)
    assert ferrers_P((1, 1), 0.6) == pytest.approx(-0.8)


def test_ferrers_errors():
    with pytest.raises(DomainError):
        ferrers_P((0.5, 0.5), 1.0)
    with pytest.raises(RepresentationError):
        ferrers_Q((0.5, 2.0), 0.3)
    with pytest.raises(RepresentationError):
        ferrers_Q_diagonal(-0.5, 0.3)


def test_wronskians_where_well_conditioned():
    # Away from theta' -> pi the two solutions are not nearly proportional and
    # five-point differences resolve the Wronskian to 1e-7.
    res = check_wronskian(thetas=np.linspace(0.2, 2.3, 22))
    assert res.passed, res.failures[:5]
    assert res.max_error < 1e-7
