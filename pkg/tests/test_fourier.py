import io
import json
import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from spheregreen.errors import DomainError, SingularityError
from spheregreen.fourier import (a_coeffs, elliptic_data, euclidean_m0_coeff, fourier_coeff_quadrature,
                                 fourier_coeff_quadrature_ab, fourier_coeff_s2, fourier_coeff_s3,
                                 fourier_coeff_s3_ab, fourier_coeff_s3_m0, fourier_coeff_s3_m0_hopf,
                                 fourier_sum_s2, fourier_sum_s3, g2_direct, s2_log_terms, table_to_json,
                                 v_quadrature, v_sequence, v_values, write_table_csv)
from spheregreen.fundsol import J_d
from spheregreen.geometry import ab_from_angles


# --- S^2 -------------------------------------------------------------------

def test_s2_trivial_values():
    assert fourier_coeff_s2(1, 0.0, 1.2).value == 0.0
    assert fourier_coeff_s2(0, 0.3, math.pi / 2).value == pytest.approx(0.0, abs=1e-15)


def test_s2_order3_against_quadrature():
    c = fourier_coeff_s2(3, 0.9, 1.7).value
    q = fourier_coeff_quadrature(2, 3, 0.9, 1.7).value
    assert c == pytest.approx(q, abs=1e-9)


@given(st.floats(0.05, 3.1), st.floats(0.05, 3.1), st.integers(0, 8))
@settings(max_examples=60, deadline=None)
def test_s2_closed_form_on_both_sides_of_the_antipodal_line(t, tp, n):
    assume(abs(t - tp) > 1e-3)
    c = fourier_coeff_s2(n, t, tp).value
    q = fourier_coeff_quadrature(2, n, t, tp).value
    assert c == pytest.approx(q, rel=1e-8, abs=1e-9)


def test_s2_near_form_fails_beyond_the_antipodal_line():
    # The t_<^n (t_>^-n - (-1)^n t_>^n)/n form only holds for theta + theta' <= pi.
    lo, hi = 0.84, 2.31
    tl, th = math.tan(lo / 2), math.tan(hi / 2)
    near = tl ** 2 * (th ** -2 - th ** 2) / 2
    q = fourier_coeff_quadrature(2, 2, lo, hi).value
    assert abs(near - q) > 1e-2
    assert fourier_coeff_s2(2, lo, hi).value == pytest.approx(q, abs=1e-12)


def test_s2_sum_reconstructs_kernel():
    assert fourier_sum_s2(1.0, 0.6, 2.0, 40) == pytest.approx(g2_direct(1.0, 0.6, 2.0), abs=1e-10)
    assert fourier_sum_s2(1.0, 0.0, 2.0, 0) == pytest.approx(g2_direct(1.0, 0.0, 2.0), abs=1e-14)


def test_s2_log_terms_and_errors():
    z = s2_log_terms(0.7, 1.1)
    assert -1 < z.z_minus < 1 and -1 < z.z_plus < 1
    with pytest.raises(SingularityError):
        fourier_coeff_s2(0, 0.0, math.pi)
    with pytest.raises(DomainError):
        fourier_coeff_s2(-1, 0.5, 0.6)
    # a source at the antipode of the axis gives a finite, psi-independent value
    assert fourier_coeff_s2(0, 0.4, math.pi).value == pytest.approx(math.log(math.tan(0.2)))
    assert fourier_coeff_s2(3, 0.4, math.pi).value == 0.0


# --- quadrature oracle ---------------------------------------------------

@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_quadrature_coefficients_resum_to_kernel(d):
    mids, mids_p = [0.8] * (d - 2), [1.4] * (d - 2)
    A, B = ab_from_angles(0.9, 1.6, mids, mids_p)
    psi = 1.1
    total = sum(fourier_coeff_quadrature(d, m, 0.9, 1.6, mids, mids_p).value * math.cos(m * psi)
                for m in range(60))
    assert total == pytest.approx(J_d(d, math.acos(A + B * math.cos(psi))), abs=1e-7)


def test_quadrature_errors():
    with pytest.raises(SingularityError):
        fourier_coeff_quadrature_ab(3, 0, 0.5, 0.5)
    with pytest.raises(DomainError):
        fourier_coeff_quadrature(3, 0, 0.5, 0.6, (), ())


# --- S^3 -------------------------------------------------------------------

CONFIGS = [(1.0, 0.7, 1.2, 0.9), (0.3, 2.5, 0.4, 2.9), (2.0, 2.2, 1.0, 1.05), (1.4, 0.2, 0.1, 3.0)]


@pytest.mark.parametrize("angles", CONFIGS)
@pytest.mark.parametrize("m", [0, 1, 2, 5])
def test_s3_closed_form_against_quadrature(angles, m):
    c = fourier_coeff_s3(m, *angles)
    q = fourier_coeff_quadrature(3, m, angles[0], angles[1], [angles[2]], [angles[3]])
    assert c.value == pytest.approx(q.value, rel=1e-9, abs=1e-11)
    assert c.method == "elliptic" and c.est_error >= 0


def test_s3_small_B_uses_extended_precision():
    A, B = 0.2, 1e-4
    dbl = fourier_coeff_s3_ab(4, A, B, precision="double")
    auto = fourier_coeff_s3_ab(4, A, B)
    q = fourier_coeff_quadrature_ab(3, 4, A, B, tol=1e-14)
    assert abs(auto.value - q.value) < 1e-13
    assert dbl.est_error > 1e-6          # the double sum knows it lost everything
    assert auto.est_error < 1e-12


def test_s3_degenerate_B():
    A = 0.3
    assert fourier_coeff_s3_ab(0, A, 0.0).value == pytest.approx(A / math.sqrt(1 - A * A))
    assert fourier_coeff_s3_ab(2, A, 0.0).value == pytest.approx(0.0, abs=1e-12)


def test_s3_printed_variants_disagree_with_quadrature():
    angles = (1.0, 0.7, 1.2, 0.9)
    A, B = ab_from_angles(1.0, 0.7, [1.2], [0.9])
    q = fourier_coeff_quadrature_ab(3, 2, A, B).value
    assert abs(fourier_coeff_s3_ab(2, A, B, prefactor="printed").value - q) > 1e-3
    assert abs(fourier_coeff_s3_ab(3, A, B, literal_recurrence=True).value
               - fourier_coeff_quadrature_ab(3, 3, A, B).value) > 1e-3
    assert abs(fourier_coeff_s3_m0(*angles, variant="printed") - fourier_coeff_s3_m0(*angles)) > 1e-3


def test_m0_forms_agree():
    angles = (1.1, 0.5, 2.0, 1.3)
    assert fourier_coeff_s3_m0(*angles) == pytest.approx(fourier_coeff_s3(0, *angles).value, rel=1e-12)
    v, vp, p1, p1p = 0.5, 0.9, 0.3, -0.8
    A = math.cos(v) * math.cos(vp) * math.cos(p1 - p1p)
    B = math.sin(v) * math.sin(vp)
    q = fourier_coeff_quadrature_ab(3, 0, A, B).value
    assert fourier_coeff_s3_m0_hopf(v, vp, p1, p1p) == pytest.approx(q, rel=1e-10)


def test_s3_flat_limit_of_m0_term():
    R = 1e3
    r, rp, t2, t2p = 0.8, 1.3, 0.7, 1.9
    g = fourier_coeff_s3(0, r / R, rp / R, t2, t2p).value / (4 * math.pi * R)
    assert g == pytest.approx(euclidean_m0_coeff(r, rp, t2, t2p), rel=1e-5)


@pytest.mark.parametrize("m", [12, 24, 40])
def test_s3_high_order_escalates_precision(m):
    angles = (1.0, 0.4, 1.2, 0.9)
    c = fourier_coeff_s3(m, *angles)
    q = fourier_coeff_quadrature(3, m, angles[0], angles[1], [angles[2]], [angles[3]], tol=1e-15)
    assert c.value == pytest.approx(q.value, abs=1e-14)
    assert fourier_coeff_s3(m, *angles, precision="double").est_error > 1e-6


def test_s3_sum_reconstructs_cot():
    angles = (1.0, 0.4, 1.2, 0.9)
    A, B = ab_from_angles(1.0, 0.4, [1.2], [0.9])
    psi = 0.8
    exact = 1.0 / math.tan(math.acos(A + B * math.cos(psi)))
    assert fourier_sum_s3(*angles, psi, 40) == pytest.approx(exact, abs=1e-8)


# --- elliptic pieces -----------------------------------------------------

def test_elliptic_parameters_ordering():
    A, B = ab_from_angles(1.0, 0.7, [1.2], [0.9])
    ed = elliptic_data(A, B)
    assert 0 < ed.alpha2 < ed.k2 < 1
    assert ed.kc2 == pytest.approx(1 - ed.k2)
    with pytest.raises(SingularityError):
        elliptic_data(0.5, 0.5)


@pytest.mark.parametrize("a2,k2", [(0.3, 0.5), (0.05, 0.9), (0.6, 0.65)])
def test_v_values_against_quadrature(a2, k2):
    V = v_values(6, a2, k2)
    for j, v in enumerate(V):
        assert v == pytest.approx(v_quadrature(j, a2, k2), rel=1e-11)


def test_v_sequence_uses_elliptic_parameters():
    A, B = ab_from_angles(1.0, 0.7, [1.2], [0.9])
    ed = elliptic_data(A, B)
    assert v_sequence(4, ed) == v_values(4, ed.alpha2, ed.k2)


def test_literal_recurrence_fails_quadrature():
    V = v_values(4, 0.3, 0.5, literal=True)
    assert abs(V[3] - v_quadrature(3, 0.3, 0.5)) > 1e-2


@pytest.mark.parametrize("m", [0, 1, 2, 3, 6])
def test_a_coeffs_are_power_basis_of_shifted_chebyshev(m):
    A, B = 0.3, 0.5
    T = np.polynomial.chebyshev.cheb2poly([0] * m + [1])
    ref = np.polynomial.polynomial.polymul([A / B, 1.0], T)
    got = a_coeffs(m, A, B)
    assert np.allclose(got[:len(ref)], ref, atol=1e-12)


# --- tables ----------------------------------------------------------------

def test_table_writers():
    rows = [fourier_coeff_s2(n, 0.5, 1.0) for n in range(3)]
    buf = io.StringIO()
    write_table_csv(rows, buf, {"theta": 0.5})
    lines = buf.getvalue().splitlines()
    assert lines[0] == "# theta: 0.5"
    assert lines[1] == "m,value,method,est_error"
    assert float(lines[2].split(",")[1]) == rows[0].value
    recs = json.loads(table_to_json(rows))
    assert [r["value"] for r in recs] == [r.value for r in rows]


@pytest.mark.parametrize("angles", [(1.0, 0.4, 1.2, 0.9), (2.0, 2.2, 1.0, 1.05)])
def test_s3_reconstruction_error_falls_with_M(angles):
    A, B = ab_from_angles(angles[0], angles[1], [angles[2]], [angles[3]])
    psis = np.linspace(0.0, math.pi, 9)
    exact = [1.0 / math.tan(math.acos(A + B * math.cos(p))) for p in psis]
    coeffs = [fourier_coeff_s3(m, *angles).value for m in range(33)]
    partial = lambda p, M: math.fsum(c * math.cos(m * p) for m, c in enumerate(coeffs[:M + 1]))
    errs = [max(abs(partial(p, M) - e) for p, e in zip(psis, exact)) for M in (4, 8, 16, 32)]
    assert all(b < a for a, b in zip(errs, errs[1:])), errs
