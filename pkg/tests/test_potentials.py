import math

import numpy as np
import pytest

from spheregreen.errors import ConvergenceError, DomainError, SingularityError
from spheregreen.geometry import HopfPoint
from spheregreen.potentials import (DensitySpec, binding_2disc, binding_3ball, convolve_axisymmetric,
                                    curve_segment_quadrature, euclidean_2disc_potential,
                                    euclidean_3ball_potential, euclidean_binding_2disc,
                                    euclidean_binding_3ball, euclidean_segment_potential,
                                    flat_constant_2disc, kepler_delta_coefficient, kepler_identity,
                                    kepler_pair, kepler_total_mass, mass_2disc, mass_3ball,
                                    oscillator_identity, oscillator_pair, oscillator_total_mass,
                                    potential_2disc, potential_3ball, potential_curve_segment,
                                    radial_laplacian)
from spheregreen.verify import binding_quadrature, disc_flat_residuals


# --- closed forms ----------------------------------------------------------

def test_disc_at_the_pole_and_edge():
    th0 = 0.7
    assert potential_2disc(1.0, 1.0, th0, 0.0).value == pytest.approx(
        potential_2disc(1.0, 1.0, th0, 1e-7).value, abs=1e-12)
    inner = potential_2disc(1.3, 2.0, th0, th0)
    outer = potential_2disc(1.3, 2.0, th0, th0 + 1e-12)
    assert inner.branch == "interior" and outer.branch == "exterior"
    assert inner.value == pytest.approx(outer.value, rel=1e-10)


def test_ball_at_the_pole_and_edge():
    th0 = 0.9
    assert potential_3ball(2.0, 1.5, th0, 0.0).value == pytest.approx(0.5 * 2.0 * 1.5 ** 2 * math.sin(th0) ** 2)
    a = potential_3ball(2.0, 1.5, th0, th0).value
    b = potential_3ball(2.0, 1.5, th0, th0 + 1e-12).value
    assert a == pytest.approx(b, rel=1e-10)


@pytest.mark.parametrize("theta", [0.0, 0.3, 0.8, 1.5, 2.6])
def test_closed_forms_against_convolution(theta):
    for kind, d, fn in (("disc2", 2, potential_2disc), ("ball3", 3, potential_3ball)):
        spec = DensitySpec(kind, 0.9, 0.8, d=d, R=1.4)
        assert fn(0.9, 1.4, 0.8, theta).value == pytest.approx(
            convolve_axisymmetric(d, 1.4, spec, theta), rel=1e-9, abs=1e-11)


def test_convolution_of_tabulated_and_callable_profiles():
    grid = np.linspace(0.0, 0.6, 4)
    tab = convolve_axisymmetric(3, 1.0, (grid, np.ones_like(grid)), 1.5)
    fn = convolve_axisymmetric(3, 1.0, lambda t: 1.0 if t <= 0.6 else 0.0, 1.5, breakpoints=[0.6])
    assert tab == pytest.approx(fn, rel=1e-10)
    assert fn == pytest.approx(potential_3ball(1.0, 1.0, 0.6, 1.5).value, rel=1e-9)
    with pytest.raises(DomainError):
        convolve_axisymmetric(3, 1.0, ([0.0, 0.0], [1.0, 1.0]), 1.0)
    with pytest.raises(ConvergenceError):
        convolve_axisymmetric(3, 1.0, lambda t: t ** -5, 1.0)


def test_curve_segment_matches_its_integral_and_ignores_phi2():
    for vt, p1 in ((0.4, 0.2), (1.1, 2.5), (0.05, -0.9)):
        a = potential_curve_segment(1.2, 3.0, 0.8, HopfPoint(3.0, vt, p1, 0.0))
        b = potential_curve_segment(1.2, 3.0, 0.8, HopfPoint(3.0, vt, p1, 1.7))
        assert a == b
        assert a == pytest.approx(curve_segment_quadrature(1.2, 0.8, vt, p1), rel=1e-10, abs=1e-12)
    with pytest.raises(SingularityError):
        potential_curve_segment(1.0, 1.0, 0.8, HopfPoint(1.0, 0.0, 0.3, 0.0))


@pytest.mark.parametrize("theta", [0.3, 0.6, 1.4])
def test_poisson_inside_and_outside(theta):
    th0, R = 0.8, 1.3
    for d, fn in ((2, potential_2disc), (3, potential_3ball)):
        lap = -radial_laplacian(lambda t: fn(0.7, R, th0, t).value, d, R, theta)
        assert lap == pytest.approx(0.7 if theta < th0 else 0.0, abs=1e-6)


def test_antipode_and_domain():
    with pytest.raises(SingularityError):
        potential_3ball(1.0, 1.0, 0.5, math.pi)
    with pytest.raises(DomainError):
        potential_2disc(1.0, 1.0, 0.0, 0.5)
    with pytest.raises(DomainError):
        potential_2disc(1.0, -1.0, 0.5, 0.5)


# --- masses and binding energies ------------------------------------------

def test_masses():
    assert mass_2disc(1.0, 1.0, math.pi) == pytest.approx(4 * math.pi)
    assert mass_3ball(1.0, 1.0, math.pi) == pytest.approx(2 * math.pi ** 2)
    assert mass_3ball(1.0, 1.0, 1e-3) == pytest.approx(4 * math.pi / 3 * 1e-9, rel=1e-6)


@pytest.mark.parametrize("theta0", [0.4, 1.0])
def test_binding_against_double_quadrature(theta0):
    assert binding_2disc(1.2, 1.5, theta0) == pytest.approx(binding_quadrature("disc2", 1.2, 1.5, theta0), rel=1e-8)
    assert binding_3ball(1.2, 1.5, theta0) == pytest.approx(binding_quadrature("ball3", 1.2, 1.5, theta0), rel=1e-8)
    printed = binding_2disc(1.2, 1.5, theta0, variant="printed")
    assert printed == pytest.approx(binding_2disc(1.2, 1.5, theta0) / 2)


def test_binding_small_angle_series_is_continuous():
    # both energies switch to a series below a threshold angle
    for fn, t in ((binding_2disc, 2 * math.asin(math.sqrt(0.1))), (binding_3ball, 0.5)):
        assert fn(1.0, 1.0, t - 1e-9) == pytest.approx(fn(1.0, 1.0, t + 1e-9), rel=1e-7)
    with pytest.raises(ValueError):
        binding_2disc(1.0, 1.0, 0.5, variant="other")


def test_ball_energy_limits():
    t = 0.01
    assert binding_3ball(1.0, 1.0, t) / t ** 5 == pytest.approx(4 * math.pi / 15, rel=1e-3)
    assert euclidean_binding_3ball(1.0, 1.0) == pytest.approx(4 * math.pi / 15)
    assert euclidean_binding_3ball(1.0, 1.0, 10.0) == pytest.approx(4 * math.pi / 15 * (1 - 13 / 2100))


def test_disc_flat_expansion_derived_vs_printed():
    radii = (1e2, 1e3)
    derived = disc_flat_residuals(radii, 1.3)
    printed = disc_flat_residuals(radii, 1.3, "printed")
    assert math.log10(derived[0] / derived[1]) > 3.5
    assert math.log10(printed[0] / printed[1]) < 2.5
    with pytest.raises(ValueError):
        euclidean_binding_2disc(1.0, 1.0, 10.0, correction="other")


# --- flat limits -------------------------------------------------------------

def test_flat_limit_potentials():
    R, r0 = 1e4, 1.3
    for r in (0.5, 2.0):
        ball = potential_3ball(1.0, R, r0 / R, r / R).value
        assert ball == pytest.approx(euclidean_3ball_potential(1.0, r0, r), rel=1e-6)
        disc = potential_2disc(1.0, R, r0 / R, r / R).value - flat_constant_2disc(1.0, r0, R)
        assert disc == pytest.approx(euclidean_2disc_potential(1.0, r0, r), rel=1e-6)
    seg = potential_curve_segment(1.0, R, 1.0 / R, HopfPoint(R, 0.5 / R, 0.2 / R))
    assert seg == pytest.approx(euclidean_segment_potential(1.0, 1.0, 0.5, 0.2), rel=1e-6)


# --- superintegrable pairs ---------------------------------------------------

def test_oscillator_special_values():
    assert oscillator_pair(4, 2.0, 0.5, 0.0) == (0.0, -2 * 0.5 * 4 / 4.0)
    with pytest.raises(SingularityError):
        oscillator_pair(3, 1.0, 1.0, math.pi / 2)
    assert oscillator_total_mass(3, 1.0, 1.0) == (-math.inf, True)


def test_kepler_special_values():
    p = kepler_pair(3, 1.0, 1.0, math.pi / 2)
    assert p.potential == pytest.approx(0.0, abs=1e-16) and p.density == pytest.approx(0.0, abs=1e-16)
    assert kepler_delta_coefficient(3, 1.0) == 0.0
    assert kepler_delta_coefficient(2, 1.0, 0.1) == pytest.approx(2 / math.sin(0.1))
    with pytest.raises(DomainError):
        kepler_pair(2, 1.0, 1.0, 0.5)
    with pytest.raises(SingularityError):
        kepler_pair(3, 1.0, 1.0, 0.0)


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_superintegrable_laplacians(d):
    R, alpha = 1.2, 0.6
    eps = 1e-2 if d == 2 else None
    for th in (0.3, 1.0, 2.4):
        for pair in (lambda t: oscillator_pair(d, R, alpha, t), lambda t: kepler_pair(d, R, alpha, t, eps)):
            lap = -radial_laplacian(lambda t: pair(t).potential, d, R, th)
            rho = pair(th).density
            assert lap == pytest.approx(rho, rel=1e-6, abs=1e-6 * alpha / R ** 2)


def test_kepler_smooth_mass_vanishes_by_symmetry():
    assert abs(kepler_total_mass(4, 1.0, 1.0, 0.05).value) < 1e-8
    with pytest.raises(DomainError):
        kepler_total_mass(4, 1.0, 1.0, 2.0)


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_oscillator_identity(d):
    lhs, rhs = oscillator_identity(d, 0.7)
    assert lhs == pytest.approx(rhs, rel=1e-8, abs=1e-8)


@pytest.mark.parametrize("d,theta", [(4, 0.5), (5, 1.3), (6, 2.5)])
def test_kepler_identity(d, theta):
    lhs, rhs = kepler_identity(d, theta)
    assert lhs == pytest.approx(rhs, rel=1e-8, abs=1e-8)
    with pytest.raises(DomainError):
        kepler_identity(3, theta)


# --- density specs -----------------------------------------------------------

def test_density_spec_parsing():
    s = DensitySpec.from_json('{"kind": "disc2", "rho0": 1.5, "theta0": 0.4, "R": 2}')
    assert (s.kind, s.amplitude, s.extent, s.d, s.R) == ("disc2", 1.5, 0.4, 2, 2.0)
    s = DensitySpec.from_dict({"kind": "curve_segment", "rho0": 1.0, "varphi": 0.3})
    assert s.extent == 0.3 and s.d == 3
    s = DensitySpec.from_dict({"kind": "kepler", "alpha": 2.0, "d": 2, "epsilon": 0.01})
    assert s.epsilon == 0.01


@pytest.mark.parametrize("data", [
    {"kind": "disc2", "theta0": 0.4},
    {"kind": "nope", "rho0": 1.0},
    {"kind": "disc2", "rho0": 1.0, "theta0": 4.0},
    {"kind": "ball3", "rho0": 1.0, "theta0": 0.4, "d": 2},
    {"kind": "kepler", "alpha": 1.0, "d": 2},
    {"kind": "ball3", "rho0": 1.0, "theta0": 0.4, "colour": "red"},
    {"kind": "ball3", "rho0": 0.0, "theta0": 0.4},
])
def test_density_spec_errors(data):
    with pytest.raises(DomainError):
        DensitySpec.from_dict(data)
