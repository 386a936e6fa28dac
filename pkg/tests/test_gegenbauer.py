import math
import random

import pytest

from spheregreen.errors import ArgumentError, ConvergenceError, DomainError, SingularityError
from spheregreen.fourier import fourier_coeff_s3
from spheregreen.fundsol import greens, greens_theta
from spheregreen.gegenbauer import (addition_fourier_coeff, convergence_ratio, direction_cos_gamma,
                                    gegenbauer_partial_sums, gegenbauer_sum, gegenbauer_sum_adaptive,
                                    gegenbauer_term, radial_u_l, sph_symmetric_H)
from spheregreen.geometry import SpherePoint, separation_cos_gamma
from spheregreen.verify import regular_pair


@pytest.mark.parametrize("d", [3, 4, 5, 6])
@pytest.mark.parametrize("l", [0, 1, 4])
def test_u_l_is_symmetric_and_continuous(d, l):
    a = radial_u_l(d, 1.3, l, 0.6, 1.4).u_l_value
    b = radial_u_l(d, 1.3, l, 1.4, 0.6).u_l_value
    assert a == pytest.approx(b, rel=1e-14)
    below = radial_u_l(d, 1.3, l, 0.9 - 1e-9, 0.9).u_l_value
    above = radial_u_l(d, 1.3, l, 0.9 + 1e-9, 0.9).u_l_value
    assert below == pytest.approx(above, rel=1e-7)


def test_branch_labels():
    assert radial_u_l(4, 1.0, 2, 0.5, 1.0).branch == "even_d"
    assert radial_u_l(5, 1.0, 2, 0.5, 1.0).branch == "odd_d"


def test_u_l_radius_scaling():
    assert radial_u_l(5, 2.0, 1, 0.5, 1.0).u_l_value == pytest.approx(
        radial_u_l(5, 1.0, 1, 0.5, 1.0).u_l_value / 8.0, rel=1e-14)


def test_cos_gamma_drops_the_radial_angle():
    p = SpherePoint(1.0, 0.7, (0.4, 1.9), 0.3)
    q = SpherePoint(1.0, 2.1, (1.2, 0.5), -1.1)
    c = direction_cos_gamma(p, q)
    # rebuilding the points at the equator makes gamma the full separation
    pe = SpherePoint(1.0, math.pi / 2, p.mids, p.phi)
    qe = SpherePoint(1.0, math.pi / 2, q.mids, q.phi)
    assert c == pytest.approx(separation_cos_gamma(pe, qe), abs=1e-14)


@pytest.mark.parametrize("d", [3, 4, 5])
def test_sum_matches_kernel(d):
    rng = random.Random(11 + d)
    for _ in range(5):
        p, q = regular_pair(rng, d, R=1.7)
        exact = greens(d, 1.7, p, q).value
        assert gegenbauer_sum(d, 1.7, p, q, 60) == pytest.approx(exact, abs=1e-7)
        val, n = gegenbauer_sum_adaptive(d, 1.7, p, q, tol=1e-13)
        assert val == pytest.approx(exact, abs=1e-10)
        assert n < 200


def test_partial_sums_end_at_the_sum():
    p, q = SpherePoint(1.0, 0.5, (1.0,), 0.2), SpherePoint(1.0, 1.2, (0.4,), 1.5)
    ps = gegenbauer_partial_sums(3, 1.0, p, q, 12)
    assert len(ps) == 13
    assert ps[-1] == pytest.approx(gegenbauer_sum(3, 1.0, p, q, 12), rel=1e-14)
    cg = direction_cos_gamma(p, q)
    assert ps[0] == pytest.approx(gegenbauer_term(3, 1.0, 0, 0.5, 1.2, cg), rel=1e-14)


def test_convergence_ratio_and_divergence():
    assert convergence_ratio(0.5, 1.2) == pytest.approx(math.tan(0.25) / math.tan(0.6))
    # the antipode of the source limits the region: theta_> near pi behaves like pi - theta_>
    assert convergence_ratio(0.5, math.pi - 0.3) > 1.0
    p, q = SpherePoint(1.0, 0.5, (1.0,)), SpherePoint(1.0, math.pi - 0.3, (0.4,))
    with pytest.raises(ConvergenceError):
        gegenbauer_sum_adaptive(3, 1.0, p, q)


def test_errors():
    p = SpherePoint(1.0, 0.5, (1.0,))
    with pytest.raises(SingularityError):
        gegenbauer_sum(3, 1.0, p, p, 10)
    with pytest.raises(ArgumentError):
        gegenbauer_sum(4, 1.0, p, p, 10)
    with pytest.raises(DomainError):
        radial_u_l(2, 1.0, 1, 0.5, 1.0)
    with pytest.raises(DomainError):
        radial_u_l(3, 1.0, 1, 0.0, 1.0)
    with pytest.raises(DomainError):
        gegenbauer_sum(3, 1.0, p, SpherePoint(1.0, 0.9, (1.0,)), -1)


@pytest.mark.parametrize("m", [0, 1, 2, 4])
def test_addition_theorem_against_closed_form(m):
    angles = (0.6, 1.4, 0.8, 2.0)
    a = addition_fourier_coeff(m, *angles, L=40)
    c = fourier_coeff_s3(m, *angles)
    assert a.value == pytest.approx(c.value, abs=1e-6)
    assert a.method == "addition_theorem"


def test_addition_theorem_on_the_axis():
    assert addition_fourier_coeff(2, 0.6, 1.4, 0.0, 1.0, L=20).value == 0.0
    with pytest.raises(DomainError):
        addition_fourier_coeff(1, 0.6, 1.4, 4.0, 1.0, L=20)


@pytest.mark.parametrize("d", [2, 3, 5])
def test_sph_symmetric_H(d):
    assert sph_symmetric_H(d, 1.4, 1.1) == greens_theta(d, 1.4, 1.1)
    with pytest.raises(DomainError):
        sph_symmetric_H(d, 1.4, 0.0)


def test_sph_symmetric_H_antipode_d2():
    with pytest.raises(SingularityError):
        sph_symmetric_H(2, 1.0, math.pi - 1e-10)
