"""Fundamental solution of the Laplace-Beltrami operator on S_R^d.

The kernel is

    G_R^d(x, x') = Gamma(d/2) / (2 pi^{d/2} R^{d-2}) * J_d(Theta),
    J_d(Theta)   = int_Theta^{pi/2} dx / sin^{d-1}(x),

with Theta the geodesic angle between x and x'.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ArgumentError, DomainError, SingularityError
from .geometry import SpherePoint, geodesic_distance
from .specfun.ferrers import ferrers_Q

THETA_GUARD = 1e-8


@dataclass(frozen=True)
class KernelValue:
    """Value of the hypersphere kernel for a given geodesic angle."""

    value: float
    d: int
    R: float
    theta_sep: float


def _check_dim(d: int) -> int:
    if int(d) != d or d < 2:
        raise DomainError(f"dimension d must be an integer >= 2, got {d}")
    return int(d)


def _check_theta(Theta: float) -> float:
    if not (math.isfinite(Theta) and 0.0 < Theta < math.pi):
        raise DomainError(f"geodesic angle Theta={Theta} must lie in (0, pi)")
    if Theta < THETA_GUARD:
        raise SingularityError(f"Theta={Theta:.3g} inside the coincidence guard band (< {THETA_GUARD:g})")
    return float(Theta)


def J_d(d: int, Theta: float) -> float:
    """The integral J_d(Theta) by the reduction formula in d.

    J_d = cos(Theta) / ((d-2) sin^{d-2}(Theta)) + (d-3)/(d-2) J_{d-2}, starting
    from J_2 = log cot(Theta/2) and J_3 = cot(Theta). ``J_1 = pi/2 - Theta`` is
    also accepted.

    Notes
    -----
    J_d diverges at both ends of (0, pi); near the antipode it is large and
    negative, and is returned as such.
    """
    if d == 1:
        return math.pi / 2 - _check_theta(Theta)
    return j_reduce(_check_dim(d), _check_theta(Theta))


def j_reduce(d: int, Theta: float) -> float:
    """Reduction recurrence for J_d without argument checks (quadrature kernels)."""
    s, c = math.sin(Theta), math.cos(Theta)
    if Theta == math.pi / 2:
        return 0.0
    if d % 2 == 0:
        val, k = -math.log(math.tan(Theta / 2.0)), 2
    else:
        val, k = c / s, 3
    while k < d:
        k += 2
        val = c / ((k - 2) * s ** (k - 2)) + (k - 3) / (k - 2) * val
    return val


def J_d_ferrers(d: int, Theta: float) -> float:
    """J_d(Theta) through the Ferrers function Q_{d/2-1}^{1-d/2}(cos Theta)."""
    d = _check_dim(d)
    Theta = _check_theta(Theta)
    nu = d / 2.0 - 1.0
    pref = math.factorial(d - 2) / (math.gamma(d / 2.0) * 2.0 ** nu)
    return pref * math.sin(Theta) ** (-nu) * ferrers_Q((nu, -nu), math.cos(Theta))


def normalization(d: int, R: float) -> float:
    """Factor 2 pi^{d/2} R^{d-2} / Gamma(d/2) turning G_R^d into the normalized kernel."""
    d = _check_dim(d)
    if not R > 0:
        raise DomainError(f"radius R={R} must be positive")
    return 2.0 * math.pi ** (d / 2.0) * R ** (d - 2) / math.gamma(d / 2.0)


def greens_theta(d: int, R: float, Theta: float) -> float:
    """G_R^d as a function of the geodesic angle."""
    return J_d(d, Theta) / normalization(d, R)


def greens(d: int, R: float, p: SpherePoint, q: SpherePoint) -> KernelValue:
    """Fundamental solution G_R^d(p, q) for two points of S_R^d.

    Raises
    ------
    ArgumentError
        If ``d`` or ``R`` disagree with the points.
    SingularityError
        If the points coincide (geodesic angle below the guard band).
    """
    d = _check_dim(d)
    if p.d != d or q.d != d:
        raise ArgumentError(f"points have dimension {p.d}/{q.d}, expected d={d}")
    if not (math.isclose(p.R, R, rel_tol=1e-12) and math.isclose(q.R, R, rel_tol=1e-12)):
        raise ArgumentError(f"points have radius {p.R}/{q.R}, expected R={R}")
    sep = geodesic_distance(p, q)
    if sep.Theta < THETA_GUARD:
        raise SingularityError("coincident points: the kernel is singular at Theta = 0")
    return KernelValue(value=greens_theta(d, R, sep.Theta), d=d, R=R, theta_sep=sep.Theta)


def newtonian_euclidean_r(d: int, r: float) -> float:
    """Euclidean Newtonian kernel as a function of the separation r > 0."""
    d = _check_dim(d)
    if not r > 0:
        raise SingularityError(f"Euclidean kernel is singular at separation r={r}")
    if d == 2:
        return -math.log(r) / (2.0 * math.pi)
    return math.gamma(d / 2.0) / (2.0 * math.pi ** (d / 2.0) * (d - 2)) * r ** (2 - d)


def newtonian_euclidean(d: int, x: Sequence[float], y: Sequence[float]) -> float:
    """Newtonian potential kernel of R^d evaluated for two points x, y."""
    x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
    if x.shape != (d,) or y.shape != (d,):
        raise ArgumentError(f"points must have shape ({d},), got {x.shape} and {y.shape}")
    return newtonian_euclidean_r(d, float(np.linalg.norm(x - y)))
