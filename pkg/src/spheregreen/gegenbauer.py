"""Gegenbauer expansion of the hypersphere kernel.

For d >= 3 the kernel separates in the radial angle theta and the
separation angle gamma of the remaining coordinates,

    G_R^d = Gamma(d/2) / (2 pi^{d/2} (d-2)) * sum_l (2l + d - 2) u_l(theta, theta') C_l^{d/2-1}(cos gamma),

with u_l built from Ferrers functions of degree d/2 - 1. The second
solution is Q for even d and P^{+mu} for odd d, since the other pair has a
vanishing or undefined Wronskian.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .config import DEFAULT_CONFIG, ExpansionConfig
from .errors import ArgumentError, ConvergenceError, DomainError, SingularityError
from .fourier import FourierCoefficient, neumann
from .fundsol import greens_theta
from .geometry import SpherePoint, ab_from_angles, clamp_unit
from .specfun.ferrers import ferrers_P, ferrers_Q
from .specfun.polynomials import assoc_legendre_P, gegenbauer_C


@dataclass(frozen=True)
class RadialPair:
    """Radial factor u_l of the Gegenbauer expansion."""

    d: int
    l: int
    u_l_value: float
    branch: str  # "even_d" or "odd_d"


def _check_angle(name: str, t: float) -> float:
    if not (math.isfinite(t) and 0.0 < t < math.pi):
        raise DomainError(f"{name}={t} must lie in the open interval (0, pi)")
    return float(t)


def _check_d(d: int, low: int = 3) -> int:
    if int(d) != d or d < low:
        raise DomainError(f"dimension d must be an integer >= {low}, got {d}")
    return int(d)


def radial_u_l(d: int, R: float, l: int, theta: float, theta_p: float) -> RadialPair:
    """Radial factor u_l(theta, theta') of the degree-l term.

    Parameters
    ----------
    d : int
        Dimension, at least 3.
    R : float
        Radius of the hypersphere.
    l : int
        Gegenbauer degree.
    theta, theta_p : float
        Radial angles of the two points, both in (0, pi).

    Returns
    -------
    RadialPair
        ``branch`` records which second solution was used.
    """
    d = _check_d(d)
    if int(l) != l or l < 0:
        raise DomainError(f"degree l must be a nonnegative integer, got {l}")
    if not R > 0:
        raise DomainError(f"radius R={R} must be positive")
    theta = _check_angle("theta", theta)
    theta_p = _check_angle("theta_p", theta_p)
    l = int(l)
    lo, hi = min(theta, theta_p), max(theta, theta_p)
    nu = d / 2.0 - 1.0
    mu = nu + l
    base = R ** (2 - d) * (math.sin(theta) * math.sin(theta_p)) ** (-nu)
    p_lo = ferrers_P((nu, -mu), math.cos(lo))
    if d % 2 == 0:
        sign = -1.0 if (d // 2 - 1 + l) % 2 else 1.0
        val = sign * base * p_lo * ferrers_Q((nu, mu), math.cos(hi))
        return RadialPair(d, l, val, "even_d")
    sign = -1.0 if ((d - 3) // 2 + l) % 2 else 1.0
    val = 0.5 * math.pi * sign * base * p_lo * ferrers_P((nu, mu), math.cos(hi))
    return RadialPair(d, l, val, "odd_d")


def gegenbauer_term(d: int, R: float, l: int, theta: float, theta_p: float, cos_gamma: float) -> float:
    """Degree-l term of the expansion, prefactor included."""
    nu = d / 2.0 - 1.0
    pref = math.gamma(d / 2.0) / (2.0 * math.pi ** (d / 2.0) * (d - 2))
    u = radial_u_l(d, R, l, theta, theta_p).u_l_value
    return pref * (2 * l + d - 2) * u * gegenbauer_C(l, nu, cos_gamma)


def _angles(d: int, R: float, p: SpherePoint, q: SpherePoint):
    d = _check_d(d)
    if p.d != d or q.d != d:
        raise ArgumentError(f"points have dimension {p.d}/{q.d}, expected d={d}")
    if not (math.isclose(p.R, R, rel_tol=1e-12) and math.isclose(q.R, R, rel_tol=1e-12)):
        raise ArgumentError(f"points have radius {p.R}/{q.R}, expected R={R}")
    cg = direction_cos_gamma(p, q)
    if p.theta == q.theta and cg >= 1.0:
        raise SingularityError("coincident points")
    return d, _check_angle("theta", p.theta), _check_angle("theta_p", q.theta), cg


def direction_cos_gamma(p: SpherePoint, q: SpherePoint) -> float:
    """cos(gamma) between the S^{d-1} directions of two points (radial angle dropped)."""
    if not p.mids:
        return math.cos(p.phi - q.phi)
    a, b = ab_from_angles(p.mids[-1], q.mids[-1], p.mids[:-1], q.mids[:-1])
    return clamp_unit(a + b * math.cos(p.phi - q.phi))


def convergence_ratio(theta: float, theta_p: float) -> float:
    """Geometric rate q of the radial factors, |u_l| ~ q^l.

    The second solution is symmetric about theta = pi/2, so the kernel's
    singularity at the antipode of the source also bounds convergence:
    q = tan(theta_</2) / tan(min(theta_>, pi - theta_>)/2), and the series
    converges only for q < 1.
    """
    lo, hi = min(theta, theta_p), max(theta, theta_p)
    return math.tan(lo / 2.0) / math.tan(min(hi, math.pi - hi) / 2.0)


def gegenbauer_sum(d: int, R: float, p: SpherePoint, q: SpherePoint, L: int) -> float:
    """Partial sum over l = 0..L of the Gegenbauer expansion of G_R^d(p, q).

    The partial sums approach ``greens`` only where
    :func:`convergence_ratio` is below one.
    """
    d, t, tp, cg = _angles(d, R, p, q)
    if int(L) != L or L < 0:
        raise DomainError(f"truncation L must be a nonnegative integer, got {L}")
    return math.fsum(gegenbauer_term(d, R, l, t, tp, cg) for l in range(int(L) + 1))


def gegenbauer_partial_sums(d: int, R: float, p: SpherePoint, q: SpherePoint, L: int) -> list[float]:
    """Running partial sums for l = 0..L, for convergence studies."""
    d, t, tp, cg = _angles(d, R, p, q)
    out, acc = [], []
    for l in range(int(L) + 1):
        acc.append(gegenbauer_term(d, R, l, t, tp, cg))
        out.append(math.fsum(acc))
    return out


def gegenbauer_sum_adaptive(d: int, R: float, p: SpherePoint, q: SpherePoint,
                            tol: float = 1e-12, config: ExpansionConfig | None = None) -> tuple[float, int]:
    """Sum the expansion until three consecutive terms fall below tol times the running scale.

    Returns the value and the number of terms used. The terms alternate in
    sign through (-1)^l, so a single small term is not a reliable stop.
    """
    cfg = config or DEFAULT_CONFIG
    d, t, tp, cg = _angles(d, R, p, q)
    q_rate = convergence_ratio(t, tp)
    if q_rate >= 1.0:
        raise ConvergenceError(f"expansion diverges for theta={t}, theta_p={tp} (ratio {q_rate:.3g} >= 1)")
    terms, small = [], 0
    for l in range(cfg.max_terms):
        term = gegenbauer_term(d, R, l, t, tp, cg)
        terms.append(term)
        scale = max(abs(x) for x in terms)
        small = small + 1 if abs(term) <= tol * scale else 0
        if small >= 3:
            return math.fsum(terms), l + 1
    raise ConvergenceError(f"Gegenbauer series not converged after {cfg.max_terms} terms")


def addition_fourier_coeff(m: int, theta: float, theta_p: float, theta2: float, theta2_p: float,
                           L: int) -> FourierCoefficient:
    """Fourier coefficient G_m of 4 pi R G_R^3 as a truncated sum over meridional modes.

    Uses

        G_m = pi eps_m / (2 sqrt(sin theta sin theta'))
              * sum_{l=|m|}^{L} (-1)^l (2l+1) (l-m)!/(l+m)! P_l^m(cos theta_2) P_l^m(cos theta_2')
                * P_{1/2}^{-(1/2+l)}(cos theta_<) P_{1/2}^{1/2+l}(cos theta_>).
    """
    if int(m) != m:
        raise DomainError(f"order m must be an integer, got {m}")
    m = abs(int(m))
    theta = _check_angle("theta", theta)
    theta_p = _check_angle("theta_p", theta_p)
    for name, t in (("theta2", theta2), ("theta2_p", theta2_p)):
        if not (0.0 <= t <= math.pi):
            raise DomainError(f"{name}={t} must lie in [0, pi]")
    if int(L) != L or L < 0:
        raise DomainError(f"truncation L must be a nonnegative integer, got {L}")
    lo, hi = math.cos(min(theta, theta_p)), math.cos(max(theta, theta_p))
    c2, c2p = math.cos(theta2), math.cos(theta2_p)
    terms = []
    for l in range(m, int(L) + 1):
        if m and (abs(c2) == 1.0 or abs(c2p) == 1.0):
            break  # P_l^m(+-1) = 0 for m >= 1
        ang = _assoc_at(l, m, c2) * _assoc_at(l, m, c2p)
        ang *= math.exp(math.lgamma(l - m + 1) - math.lgamma(l + m + 1))
        rad = ferrers_P((0.5, -(0.5 + l)), lo) * ferrers_P((0.5, 0.5 + l), hi)
        terms.append((-1) ** l * (2 * l + 1) * ang * rad)
    val = math.pi * neumann(m) / (2.0 * math.sqrt(math.sin(theta) * math.sin(theta_p))) * math.fsum(terms)
    est = abs(terms[-1]) if terms else 0.0
    return FourierCoefficient(m, val, "addition_theorem", est)


def _assoc_at(l: int, m: int, x: float) -> float:
    if abs(x) == 1.0:
        return (x ** l) if m == 0 else 0.0
    return assoc_legendre_P(l, m, x)


def sph_symmetric_H(d: int, R: float, theta_gt: float) -> float:
    """Degree-zero part of the kernel for a source symmetric about the pole.

    It equals the full kernel evaluated at geodesic angle ``theta_gt``, the
    larger of the two radial angles.
    """
    d = _check_d(d, low=2)
    if not (math.isfinite(theta_gt) and 0.0 < theta_gt < math.pi):
        raise DomainError(f"theta_gt={theta_gt} must lie in (0, pi)")
    if d == 2 and math.pi - theta_gt < 1e-8:
        raise SingularityError("the d = 2 kernel diverges at the antipode")
    return greens_theta(d, R, theta_gt)
