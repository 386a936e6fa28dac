"""Acceptance criteria, one test each.

Tolerances are the required ones. Where a check needs a sampling choice the
requirement leaves open, the choice is noted next to the call.
"""

import numpy as np

from spheregreen import verify as v


def test_criterion_01_s2_closed_form(criterion):
    # 200 random (theta, theta') in (0.1, 3.0)^2, n <= 10, mixed error 1e-8
    r = v.check_s2_closed_form(n_pairs=200, n_max=10, tol=1e-8)
    assert criterion(r), r.failures[:5]


def test_criterion_02_s3_closed_form(criterion):
    r = v.check_s3_closed_form(n_configs=100, m_max=6, tol=1e-7)
    r0 = v.check_m0_forms(tol=1e-8)
    assert criterion(r, r0), (r.failures + r0.failures)[:5]


def test_criterion_03_v_sequence(criterion):
    r = v.check_v_sequence(n_samples=10, j_max=6, tol=1e-8)
    assert criterion(r), r.failures[:5]


def test_criterion_04_gegenbauer_convergence(criterion):
    # pairs drawn with convergence ratio <= 0.75; decrease judged on 5-term windows
    r = v.check_gegenbauer(dims=(3, 4, 5), n_pairs=20, L=60, tol=1e-6)
    assert criterion(r), r.failures[:5]


def test_criterion_05_addition_theorem(criterion):
    r = v.check_addition_theorem(n_configs=20, m_max=4, L=40, tol=1e-5)
    assert criterion(r), r.failures[:5]


def test_criterion_06_wronskians(criterion):
    # Literal grid theta' in [0.2, 2.9]. Near theta' = 2.9 the two solutions are
    # nearly proportional, P S' - S P' cancels by up to 14 digits, and the
    # check fails for l >= 4 there. It is left failing on purpose.
    r = v.check_wronskian(dims=(3, 4, 5, 6), l_max=6, thetas=np.linspace(0.2, 2.9, 28), tol=1e-7)
    assert criterion(r), f"{len(r.failures)} failing, e.g. {r.failures[:3]}"


def test_criterion_07_radial_jump(criterion):
    r = v.check_jump(dims=(3, 4, 5), radii=(1.0, 2.0), l_max=4, tol=1e-5)
    assert criterion(r), r.failures[:5]


def test_criterion_08_potentials_vs_convolution(criterion):
    r = v.check_convolution(tol=1e-8, tol_segment=1e-9)
    assert criterion(r), r.failures[:5]


def test_criterion_09_poisson_residuals(criterion):
    r = v.check_poisson(tol=1e-5)
    assert criterion(r), r.failures[:5]


def test_criterion_10_binding_energies(criterion):
    r = v.check_binding(tol=1e-7, thetas=(0.3, 0.6, 1.2))
    assert criterion(r), r.failures[:5]


def test_criterion_11_flat_limits(criterion):
    r = v.check_flat_limit(radii=(1e2, 1e3, 1e4), target=-2.0, tol=0.2)
    assert criterion(r), r.failures[:5]


def test_criterion_12_superintegrable(criterion):
    r = v.check_identities(tol=1e-7)
    lap = v.check_superintegrable_laplacian(tol=1e-5)
    assert criterion(r, lap), (r.failures + lap.failures)[:5]
