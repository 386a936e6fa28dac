"""Numerical verification suites.

Every check compares an implementation against an independent oracle
(adaptive quadrature, finite differences, or an analytic identity) and
returns a :class:`CheckResult` with the largest observed error. Suites group
checks for the command-line ``verify`` command.

Errors are mixed absolute/relative, ``|a - b| / max(1, |b|)``, unless a
check says otherwise.
"""

from __future__ import annotations

import math
import random
import warnings
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy import integrate

from . import fourier, gegenbauer, potentials
from .fundsol import greens, greens_theta, newtonian_euclidean_r
from .geometry import HopfPoint, SpherePoint, ab_from_angles
from .specfun.ferrers import ferrers_P, ferrers_Q

DEFAULT_RADII = (1e2, 1e3, 1e4)
MAX_LISTED = 10

# One-sided fourth-order stencil for a first derivative.
_ONE_SIDED = (-25.0, 48.0, -36.0, 16.0, -3.0)


@dataclass
class CheckResult:
    """Outcome of one verification check."""

    name: str
    max_error: float
    tolerance: float
    n_cases: int
    failures: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.name}: max error {self.max_error:.3g} (tol {self.tolerance:g}, {self.n_cases} cases)"
        if self.failures:
            line += f", {len(self.failures)} failing"
        return line


class _Tally:
    def __init__(self, name: str, tol: float):
        self.name, self.tol = name, tol
        self.worst, self.n, self.failures, self.extra = 0.0, 0, [], {}

    def add(self, err: float, label: str) -> None:
        self.n += 1
        if not err <= self.tol:           # NaN counts as a failure
            self.failures.append(f"{label}: error {err:.3g}")
        self.worst = max(self.worst, err) if math.isfinite(err) else math.inf

    def result(self) -> CheckResult:
        return CheckResult(self.name, self.worst, self.tol, self.n, self.failures, self.extra)


def _mixed(a: float, b: float) -> float:
    return abs(a - b) / max(1.0, abs(b))


def _slope(radii: Sequence[float], devs: Sequence[float]) -> float:
    return float(np.polyfit(np.log(radii), np.log(np.maximum(devs, 1e-300)), 1)[0])


# --- Fourier coefficients ------------------------------------------------

def check_s2_closed_form(n_pairs: int = 200, n_max: int = 10, seed: int = 1, tol: float = 1e-8) -> CheckResult:
    """S^2 closed-form coefficients against quadrature of the azimuthal integral."""
    rng = random.Random(seed)
    t = _Tally("s2_closed_form_vs_quadrature", tol)
    for _ in range(n_pairs):
        th, thp = rng.uniform(0.1, 3.0), rng.uniform(0.1, 3.0)
        for n in range(n_max + 1):
            c = fourier.fourier_coeff_s2(n, th, thp).value
            q = fourier.fourier_coeff_quadrature(2, n, th, thp).value
            t.add(_mixed(c, q), f"n={n} theta={th!r} theta_p={thp!r}")
    return t.result()


def _regular_s3_config(rng: random.Random) -> list[float]:
    while True:
        a = [rng.uniform(0.1, 3.0) for _ in range(4)]
        A, B = ab_from_angles(a[0], a[1], [a[2]], [a[3]])
        # keep away from coincidence (A + B = 1) and antipodes (A - B = -1)
        if 1.0 - (A + B) > 1e-3 and 1.0 + (A - B) > 1e-3:
            return a


def check_s3_closed_form(n_configs: int = 100, m_max: int = 6, seed: int = 2, tol: float = 1e-7) -> CheckResult:
    """S^3 elliptic closed form against quadrature of the azimuthal integral."""
    rng = random.Random(seed)
    t = _Tally("s3_closed_form_vs_quadrature", tol)
    for _ in range(n_configs):
        a = _regular_s3_config(rng)
        for m in range(m_max + 1):
            c = fourier.fourier_coeff_s3(m, *a).value
            q = fourier.fourier_coeff_quadrature(3, m, a[0], a[1], [a[2]], [a[3]]).value
            t.add(_mixed(c, q), f"m={m} angles={a}")
    return t.result()


def check_m0_forms(n_configs: int = 20, seed: int = 3, tol: float = 1e-8) -> CheckResult:
    """The K/Pi form of G_0 and its Hopf-coordinate version against the general sum and quadrature."""
    rng = random.Random(seed)
    t = _Tally("s3_m0_forms", tol)
    for _ in range(n_configs):
        a = _regular_s3_config(rng)
        general = fourier.fourier_coeff_s3(0, *a).value
        t.add(_mixed(fourier.fourier_coeff_s3_m0(*a), general), f"m0 angles={a}")
        v, vp = rng.uniform(0.1, 1.4), rng.uniform(0.1, 1.4)
        p1, p1p = rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)
        A = math.cos(v) * math.cos(vp) * math.cos(p1 - p1p)
        B = math.sin(v) * math.sin(vp)
        if 1.0 - (A + B) < 1e-3:
            continue
        q = fourier.fourier_coeff_quadrature_ab(3, 0, A, B).value
        t.add(_mixed(fourier.fourier_coeff_s3_m0_hopf(v, vp, p1, p1p), q), f"hopf {(v, vp, p1, p1p)}")
    return t.result()


def check_v_sequence(n_samples: int = 10, j_max: int = 6, seed: int = 4, tol: float = 1e-8,
                     literal: bool = False) -> CheckResult:
    """V_j from K, E, Pi and the recurrence against quadrature of the defining integral."""
    rng = random.Random(seed)
    t = _Tally("v_sequence_literal" if literal else "v_sequence", tol)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        for _ in range(n_samples):
            k2 = rng.uniform(0.05, 0.95)
            a2 = rng.uniform(0.02, 0.95) * k2
            V = fourier.v_values(j_max, a2, k2, literal=literal)
            for j in range(j_max + 1):
                t.add(_mixed(V[j], fourier.v_quadrature(j, a2, k2)), f"j={j} alpha2={a2!r} k2={k2!r}")
    return t.result()


# --- Gegenbauer expansion ------------------------------------------------

def _random_point(rng: random.Random, d: int, R: float = 1.0) -> SpherePoint:
    return SpherePoint(R, rng.uniform(0.2, 2.9), tuple(rng.uniform(0.2, 2.9) for _ in range(d - 2)),
                       rng.uniform(-3.0, 3.0))


def regular_pair(rng: random.Random, d: int, R: float = 1.0, max_ratio: float = 0.75):
    """Random pair inside the convergence region, away from coincidence and the antipode."""
    while True:
        p, q = _random_point(rng, d, R), _random_point(rng, d, R)
        sep = greens(d, R, p, q).theta_sep
        if 0.3 < sep < 2.8 and gegenbauer.convergence_ratio(p.theta, q.theta) <= max_ratio:
            return p, q


def check_gegenbauer(dims: Sequence[int] = (3, 4, 5), n_pairs: int = 20, L: int = 60, seed: int = 5,
                     tol: float = 1e-6) -> CheckResult:
    """Partial sums at L against the closed-form kernel, and decay of the error with L.

    The terms oscillate through (-1)^l C_l(cos gamma), so decay is checked on
    the running maximum over windows of five terms (floored at 1e-10) at
    L = 5, 10, 20, 30, 40 and L - 4.
    """
    rng = random.Random(seed)
    t = _Tally("gegenbauer_vs_kernel", tol)
    marks = [x for x in (5, 10, 20, 30, 40) if x + 5 <= L] + [L - 4]
    non_monotone = 0
    for d in dims:
        for _ in range(n_pairs):
            p, q = regular_pair(rng, d)
            exact = greens(d, 1.0, p, q).value
            errs = [abs(s - exact) for s in gegenbauer.gegenbauer_partial_sums(d, 1.0, p, q, L)]
            t.add(errs[-1], f"d={d} p={p.to_dict()} q={q.to_dict()}")
            win = [max(max(errs[k:k + 5]), 1e-10) for k in marks]
            if any(b > a for a, b in zip(win, win[1:])):
                non_monotone += 1
                t.failures.append(f"d={d}: windowed error not decreasing {win}")
    t.extra["non_monotone_pairs"] = non_monotone
    return t.result()


def check_addition_theorem(n_configs: int = 20, m_max: int = 4, L: int = 40, seed: int = 6,
                           tol: float = 1e-5, max_ratio: float = 0.6) -> CheckResult:
    """Addition-theorem Fourier coefficients against the elliptic closed form."""
    rng = random.Random(seed)
    t = _Tally("addition_theorem_vs_s3_closed_form", tol)
    done = 0
    while done < n_configs:
        th, thp = rng.uniform(0.2, 2.9), rng.uniform(0.2, 2.9)
        t2, t2p = rng.uniform(0.2, 2.9), rng.uniform(0.2, 2.9)
        if gegenbauer.convergence_ratio(th, thp) > max_ratio:
            continue
        A, B = ab_from_angles(th, thp, [t2], [t2p])
        if 1.0 - (A + B) < 1e-3:
            continue
        done += 1
        for m in range(m_max + 1):
            a = gegenbauer.addition_fourier_coeff(m, th, thp, t2, t2p, L).value
            c = fourier.fourier_coeff_s3(m, th, thp, t2, t2p).value
            t.add(_mixed(a, c), f"m={m} angles={(th, thp, t2, t2p)}")
    return t.result()


# --- Wronskians and the radial jump --------------------------------------

def wronskian_pair(d: int, l: int) -> tuple[Callable, Callable, Callable]:
    """(first solution, second solution, expected Wronskian) as functions of x or theta."""
    nu = d / 2.0 - 1.0
    mu = nu + l
    first = lambda x: ferrers_P((nu, -mu), x)
    if d % 2 == 0:
        second = lambda x: ferrers_Q((nu, mu), x)
        expected = lambda th: (-1) ** (d // 2 - 1 + l) / math.sin(th) ** 2
    else:
        second = lambda x: ferrers_P((nu, mu), x)
        expected = lambda th: 2.0 * (-1) ** ((d - 3) // 2 + l) / (math.pi * math.sin(th) ** 2)
    return first, second, expected


def _central5(f: Callable[[float], float], x: float, h: float) -> float:
    return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h)


def check_wronskian(dims: Sequence[int] = (3, 4, 5, 6), l_max: int = 6,
                    thetas: Sequence[float] | None = None, h: float = 1e-4,
                    tol: float = 1e-7) -> CheckResult:
    """Wronskian of the two radial solutions by five-point differences in x = cos(theta').

    The relative error is reported together with the cancellation factor
    max(|P S'|, |S P'|) / |W|, which exceeds 1e12 near theta' = 2.9 at l = 6;
    there the finite-difference Wronskian is limited by rounding, not by the
    function values.
    """
    if thetas is None:
        thetas = np.linspace(0.2, 2.9, 28)
    t = _Tally("wronskian_" + "_".join(str(d) for d in dims), tol)
    worst_cond = 0.0
    for d in dims:
        for l in range(l_max + 1):
            first, second, expected = wronskian_pair(d, l)
            for th in thetas:
                x = math.cos(th)
                p, s = first(x), second(x)
                dp, ds = _central5(first, x, h), _central5(second, x, h)
                w_exp = expected(th)
                err = abs((p * ds - s * dp) / w_exp - 1.0)
                cond = max(abs(p * ds), abs(s * dp)) / abs(w_exp)
                worst_cond = max(worst_cond, cond)
                t.add(err, f"d={d} l={l} theta'={float(th):.4g} (cancellation {cond:.2g})")
    t.extra["max_cancellation"] = worst_cond
    return t.result()


def v_l(d: int, R: float, l: int, theta: float, theta_p: float) -> float:
    """(sin theta sin theta')^((d-1)/2) u_l(theta, theta')."""
    u = gegenbauer.radial_u_l(d, R, l, theta, theta_p).u_l_value
    return (math.sin(theta) * math.sin(theta_p)) ** ((d - 1) / 2.0) * u


def check_jump(dims: Sequence[int] = (3, 4, 5), radii: Sequence[float] = (1.0, 2.0), l_max: int = 4,
               thetas: Sequence[float] = (0.4, 1.0, 1.3, 2.0, 2.4, 2.7), h: float = 1e-4,
               tol: float = 1e-5) -> CheckResult:
    """Jump of d v_l / d theta across theta = theta' against -R^(2-d), relative error."""
    t = _Tally("radial_jump", tol)
    for d in dims:
        for R in radii:
            for l in range(l_max + 1):
                for tp in thetas:
                    f = lambda th: v_l(d, R, l, th, tp)
                    right = sum(w * f(tp + k * h) for k, w in enumerate(_ONE_SIDED)) / (12 * h)
                    left = -sum(w * f(tp - k * h) for k, w in enumerate(_ONE_SIDED)) / (12 * h)
                    target = -R ** (2 - d)
                    t.add(abs((right - left) / target - 1.0), f"d={d} R={R} l={l} theta'={tp}")
    return t.result()


# --- potentials ----------------------------------------------------------

def check_convolution(tol: float = 1e-8, tol_segment: float = 1e-9) -> CheckResult:
    """Disc and ball closed forms against the axisymmetric convolution; curve segment against its 1D integral."""
    t = _Tally("closed_forms_vs_convolution", tol)
    for R in (1.0, 2.5):
        for th0 in (0.4, 1.1):
            spec2 = potentials.DensitySpec("disc2", 1.3, th0, d=2, R=R)
            spec3 = potentials.DensitySpec("ball3", 1.3, th0, d=3, R=R)
            grid = list(np.linspace(0.0, th0, 5)) + list(np.linspace(th0 + 0.1, 3.0, 5))
            for th in grid:
                conv = potentials.convolve_axisymmetric(2, R, spec2, th)
                t.add(_mixed(potentials.potential_2disc(1.3, R, th0, th).value, conv),
                      f"disc2 R={R} theta0={th0} theta={th:.4g}")
                conv = potentials.convolve_axisymmetric(3, R, spec3, th)
                t.add(_mixed(potentials.potential_3ball(1.3, R, th0, th).value, conv),
                      f"ball3 R={R} theta0={th0} theta={th:.4g}")
    seg_worst = 0.0
    for varphi in (0.3, 1.0, 2.5):
        for vt in (0.1, 0.4, 1.0, 1.5):
            for p1 in (-2.0, 0.0, 0.25, 1.2):
                closed = potentials.potential_curve_segment(0.9, 1.0, varphi, HopfPoint(1.0, vt, p1, 0.3))
                quad = potentials.curve_segment_quadrature(0.9, varphi, vt, p1)
                err = _mixed(closed, quad)
                seg_worst = max(seg_worst, err)
                t.n += 1
                if not err <= tol_segment:
                    t.failures.append(f"segment varphi={varphi} vartheta={vt} phi1={p1}: error {err:.3g}")
    t.worst = max(t.worst, seg_worst)
    t.extra["segment_max_error"] = seg_worst
    return t.result()


def _one_sided(f: Callable[[float], float], x: float, h: float, side: int) -> float:
    return side * sum(w * f(x + side * k * h) for k, w in enumerate(_ONE_SIDED)) / (12 * h)


def check_poisson(tol: float = 1e-5, tol_match: float = 1e-7) -> CheckResult:
    """-Delta Phi against rho for the uniform sources, plus C^1 matching at the source edge."""
    t = _Tally("poisson_residuals", tol)
    rho0 = 1.7
    cases = (("disc2", 2, potentials.potential_2disc), ("ball3", 3, potentials.potential_3ball))
    match_worst = 0.0
    for name, d, pot in cases:
        for R in (1.0, 2.0):
            for th0 in (0.5, 1.2):
                f = lambda th: pot(rho0, R, th0, th).value
                inside = np.linspace(0.05, th0 - 0.05, 6)
                outside = np.linspace(th0 + 0.05, 2.8, 6)
                for th in inside:
                    res = -potentials.radial_laplacian(f, d, R, th) - rho0
                    t.add(abs(res) / rho0, f"{name} interior R={R} theta0={th0} theta={th:.4g}")
                for th in outside:
                    res = -potentials.radial_laplacian(f, d, R, th)
                    t.add(abs(res) / rho0, f"{name} exterior R={R} theta0={th0} theta={th:.4g}")
                scale = max(1.0, abs(f(th0)))
                jump = abs(f(th0 + 1e-12) - f(th0)) / scale
                dl = _one_sided(f, th0, 1e-4, -1)
                dr = _one_sided(f, th0 + 1e-12, 1e-4, 1)
                djump = abs(dr - dl) / max(1.0, abs(dl))
                for err, what in ((jump, "value"), (djump, "derivative")):
                    match_worst = max(match_worst, err)
                    if not err <= tol_match:
                        t.failures.append(f"{name} R={R} theta0={th0}: {what} mismatch {err:.3g}")
    t.extra["edge_matching_max_error"] = match_worst
    return t.result()


def check_superintegrable_laplacian(tol: float = 1e-5, R: float = 1.5, alpha: float = 0.8) -> CheckResult:
    """-Delta Phi against the paired density for the oscillator and Kepler-Coulomb pairs."""
    t = _Tally("superintegrable_laplacian", tol)
    thetas = (0.2, 0.6, 1.0, 2.2, 2.8)
    for d in (2, 3, 4, 5):
        for th in thetas:
            f = lambda x: potentials.oscillator_pair(d, R, alpha, x).potential
            rho = potentials.oscillator_pair(d, R, alpha, th).density
            res = -potentials.radial_laplacian(f, d, R, th) - rho
            t.add(abs(res) / abs(rho), f"oscillator d={d} theta={th}")
    for d, eps in ((2, 1e-2), (2, 1e-3), (3, None), (4, None), (5, None)):
        for th in thetas:
            f = lambda x: potentials.kepler_pair(d, R, alpha, x, eps).potential
            rho = potentials.kepler_pair(d, R, alpha, th, eps).density
            res = -potentials.radial_laplacian(f, d, R, th) - rho
            scale = max(abs(rho), abs(alpha) / R ** 2)
            t.add(abs(res) / scale, f"kepler d={d} eps={eps} theta={th}")
    return t.result()


def binding_quadrature(kind: str, rho0: float, R: float, theta0: float) -> float:
    """(1/2) int rho Phi dvol with Phi itself obtained by convolution (a double quadrature)."""
    d = 2 if kind == "disc2" else 3
    spec = potentials.DensitySpec(kind, rho0, theta0, d=d, R=R)
    phi = lambda th: potentials.convolve_axisymmetric(d, R, spec, th)
    val, _ = integrate.quad(lambda th: phi(th) * math.sin(th) ** (d - 1), 0.0, theta0,
                            epsabs=1e-13, epsrel=1e-12, limit=100)
    area = 2.0 * math.pi if d == 2 else 4.0 * math.pi
    return 0.5 * rho0 * area * R ** d * val


def check_binding(tol: float = 1e-7, thetas: Sequence[float] = (0.3, 0.6, 1.2),
                  variant: str = "corrected") -> CheckResult:
    """Closed-form binding energies against double quadrature, plus the small-ball limits."""
    t = _Tally("binding_energies" if variant == "corrected" else "binding_energies_printed", tol)
    for th0 in thetas:
        for R in (1.0, 1.7):
            q = binding_quadrature("disc2", 1.1, R, th0)
            t.add(_mixed(potentials.binding_2disc(1.1, R, th0, variant=variant), q),
                  f"disc2 R={R} theta0={th0}")
            q = binding_quadrature("ball3", 1.1, R, th0)
            t.add(_mixed(potentials.binding_3ball(1.1, R, th0), q), f"ball3 R={R} theta0={th0}")
    th0 = 0.01
    lead = potentials.binding_3ball(1.0, 1.0, th0) / th0 ** 5 / (4.0 * math.pi / 15.0)
    flat = potentials.euclidean_binding_3ball(1.0, th0)
    ratio = (flat - potentials.binding_3ball(1.0, 1.0, th0)) / flat / th0 ** 2 / (13.0 / 21.0)
    t.extra["leading_ratio_4pi_15"] = lead
    t.extra["curvature_ratio_13_21"] = ratio
    if abs(lead - 1.0) > 0.01:
        t.failures.append(f"small-ball energy / (4 pi/15) = {lead!r}")
    if abs(ratio - 1.0) > 0.02:
        t.failures.append(f"curvature correction / (13/21) = {ratio!r}")
    return t.result()


def disc_flat_residuals(radii: Sequence[float], r0: float = 1.3, correction: str = "derived") -> list[float]:
    """Relative gap between the S_R^2 disc energy (minus c_R M / 2) and its flat expansion."""
    out = []
    for R in radii:
        th0 = r0 / R
        e = (potentials.binding_2disc(1.0, R, th0)
             - 0.5 * potentials.flat_constant_2disc(1.0, r0, R) * potentials.mass_2disc(1.0, R, th0))
        ref = potentials.euclidean_binding_2disc(1.0, r0, R, correction=correction)
        out.append(abs(e / ref - 1.0))
    return out


def check_disc_binding_flat(radii: Sequence[float] = (1e2, 1e3), max_slope: float = -3.5) -> CheckResult:
    """The flat disc energy with its R^-2 term leaves a remainder that falls like R^-4."""
    t = _Tally("disc_binding_flat_expansion", max_slope)
    t.worst = -math.inf  # reports the shallowest slope
    for r0 in (0.7, 1.3):
        res = disc_flat_residuals(radii, r0)
        s = _slope(radii, res)
        t.n += 1
        t.extra[f"slope_r0={r0}"] = s
        t.extra[f"slope_printed_r0={r0}"] = _slope(radii, disc_flat_residuals(radii, r0, "printed"))
        t.worst = max(t.worst, s)
        if not s <= max_slope:
            t.failures.append(f"r0={r0}: residual slope {s:.3g} > {max_slope}")
    return t.result()


def flat_limit_slopes(radii: Sequence[float] = DEFAULT_RADII) -> dict:
    """Log-log slopes of the relative deviation from the Euclidean formula as R grows."""
    radii = list(radii)
    out = {}
    for d in (3, 4, 5, 6):
        for r in (0.5, 2.0):
            devs = [abs(greens_theta(d, R, r / R) / newtonian_euclidean_r(d, r) - 1.0) for R in radii]
            out[f"kernel d={d} r={r}"] = _slope(radii, devs)
    for r in (0.5, 2.0):
        devs = [abs((greens_theta(2, R, r / R) - math.log(2.0 * R) / (2.0 * math.pi))
                    / newtonian_euclidean_r(2, r) - 1.0) for R in radii]
        out[f"kernel d=2 r={r}"] = _slope(radii, devs)
    r0 = 1.3
    for r in (0.3, 0.9, 2.0, 3.0):
        devs = [abs(potentials.potential_3ball(1.0, R, r0 / R, r / R).value
                    / potentials.euclidean_3ball_potential(1.0, r0, r) - 1.0) for R in radii]
        out[f"ball3 r={r}"] = _slope(radii, devs)
        devs = [abs((potentials.potential_2disc(1.0, R, r0 / R, r / R).value
                     - potentials.flat_constant_2disc(1.0, r0, R))
                    / potentials.euclidean_2disc_potential(1.0, r0, r) - 1.0) for R in radii]
        out[f"disc2 r={r}"] = _slope(radii, devs)
    half = 1.0
    for r, z in ((0.5, 0.2), (1.0, 2.0), (0.3, -1.5)):
        devs = [abs(potentials.potential_curve_segment(1.0, R, half / R, HopfPoint(R, r / R, z / R))
                    / potentials.euclidean_segment_potential(1.0, half, r, z) - 1.0) for R in radii]
        out[f"segment r={r} z={z}"] = _slope(radii, devs)
    return out


def check_flat_limit(radii: Sequence[float] = DEFAULT_RADII, target: float = -2.0,
                     tol: float = 0.2) -> CheckResult:
    """All flat-limit slopes within target +- tol."""
    t = _Tally("flat_limit_slopes", tol)
    slopes = flat_limit_slopes(radii)
    for label, s in slopes.items():
        t.add(abs(s - target), f"{label} slope {s:.4g}")
    t.extra.update({f"slope {k}": v for k, v in slopes.items()})
    return t.result()


def check_identities(tol: float = 1e-7) -> CheckResult:
    """The oscillator and Kepler-Coulomb definite integrals against their closed forms."""
    t = _Tally("definite_integral_identities", tol)
    for d in (2, 3, 4, 5):
        for th in (0.3, 0.7, 1.2):
            lhs, rhs = potentials.oscillator_identity(d, th)
            t.add(_mixed(lhs, rhs), f"oscillator d={d} theta={th}")
    for d in (4, 5):
        for th in (0.3, 0.7, 1.2, 2.0, 2.8):
            lhs, rhs = potentials.kepler_identity(d, th)
            t.add(_mixed(lhs, rhs), f"kepler d={d} theta={th}")
    return t.result()


def check_kepler_mass(tol: float = 1e-6) -> CheckResult:
    """Smooth Kepler density mass over [eps, pi - eps] vanishes for d = 4, 5 by symmetry."""
    t = _Tally("kepler_total_mass", tol)
    for d in (4, 5):
        for eps in (1e-1, 1e-2):
            m = potentials.kepler_total_mass(d, 1.0, 1.0, eps).value
            t.add(abs(m), f"d={d} eps={eps}")
    return t.result()


# --- suites --------------------------------------------------------------

SUITES = {
    "wronskian": "Wronskians of the radial solution pairs",
    "jump": "derivative jump of v_l at theta = theta'",
    "fourier": "Fourier coefficients against quadrature, V_j sequence, m = 0 forms",
    "gegenbauer": "Gegenbauer sums against the kernel, addition theorem against the S^3 closed form",
    "convolution": "potential closed forms against convolution and 1D quadrature",
    "poisson": "finite-difference Laplacian residuals",
    "binding": "binding energies against double quadrature",
    "flat-limit": "flat-space limits as R grows",
    "identities": "superintegrable definite integrals and Kepler mass",
}


def run_suite(name: str, dims: Sequence[int] | None = None,
              radii: Sequence[float] | None = None) -> list[CheckResult]:
    """Run one named suite; ``dims`` filters the Wronskian/jump/Gegenbauer dimensions."""
    if name not in SUITES:
        raise KeyError(name)
    pick = lambda default: tuple(d for d in default if dims is None or d in dims)
    if name == "wronskian":
        return [check_wronskian(pick((3, 4, 5, 6)))]
    if name == "jump":
        return [check_jump(pick((3, 4, 5)))]
    if name == "fourier":
        return [check_s2_closed_form(), check_s3_closed_form(), check_m0_forms(), check_v_sequence()]
    if name == "gegenbauer":
        return [check_gegenbauer(pick((3, 4, 5))), check_addition_theorem()]
    if name == "convolution":
        return [check_convolution()]
    if name == "poisson":
        return [check_poisson(), check_superintegrable_laplacian()]
    if name == "binding":
        return [check_binding(), check_disc_binding_flat()]
    if name == "flat-limit":
        return [check_flat_limit(radii or DEFAULT_RADII)]
    return [check_identities(), check_kepler_mass()]
