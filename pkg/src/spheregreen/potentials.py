"""Newtonian potentials on S_R^d for a few density distributions.

Covers the uniform 2-disc on S_R^2, the uniform 3-ball on S_R^3, a uniform
circular curve segment on S_R^3 in Hopf coordinates, a generic convolution
solver for densities symmetric about the pole, and the oscillator and
Kepler-Coulomb density-potential pairs. Euclidean counterparts are provided
for flat-space comparisons.

Closed forms are written to avoid cancellation at small angles, so that
curvature corrections of relative size (r/R)^2 stay resolvable for large R.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

import numpy as np
from numpy.polynomial import Chebyshev, Polynomial
from scipy import integrate

from .errors import ConvergenceError, DomainError, SingularityError
from .fundsol import j_reduce, normalization
from .geometry import HopfPoint, angular_area
from .specfun.ferrers import ferrers_Q

KINDS = ("disc2", "ball3", "curve_segment", "oscillator", "kepler", "tabulated_axisymmetric")
_ANTIPODE_GUARD = 1e-12


@dataclass(frozen=True)
class DensitySpec:
    """Parameters of one of the supported density distributions.

    ``amplitude`` is rho0 for the uniform sources and alpha for the
    superintegrable pairs; ``extent`` is theta0 (disc, ball) or the curve
    half-angle varphi.
    """

    kind: str
    amplitude: float
    extent: float | None = None
    d: int = 3
    R: float = 1.0
    epsilon: float | None = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise DomainError(f"unknown density kind {self.kind!r}; expected one of {', '.join(KINDS)}")
        if not (math.isfinite(self.amplitude) and self.amplitude != 0.0):
            raise DomainError(f"amplitude must be finite and nonzero, got {self.amplitude}")
        if not self.R > 0:
            raise DomainError(f"radius R={self.R} must be positive")
        if self.kind in ("disc2", "ball3", "curve_segment"):
            if self.extent is None or not (0.0 < self.extent <= math.pi):
                raise DomainError(f"extent angle must lie in (0, pi] for {self.kind}, got {self.extent}")
        if self.kind == "disc2" and self.d != 2:
            raise DomainError("disc2 lives on S_R^2 (d = 2)")
        if self.kind in ("ball3", "curve_segment") and self.d != 3:
            raise DomainError(f"{self.kind} lives on S_R^3 (d = 3)")
        if self.kind == "kepler" and self.d == 2 and not (self.epsilon and self.epsilon > 0):
            raise DomainError("the d = 2 Kepler pair needs a regularization angle epsilon > 0")

    @classmethod
    def from_dict(cls, data: dict) -> "DensitySpec":
        data = dict(data)
        amp = data.pop("rho0", None)
        if amp is None:
            amp = data.pop("alpha", None)
        if amp is None:
            amp = data.pop("amplitude", None)
        if amp is None:
            raise DomainError("density needs one of rho0, alpha or amplitude")
        extent = data.pop("theta0", None)
        if extent is None:
            extent = data.pop("varphi", data.pop("extent", None))
        known = {"kind", "d", "R", "epsilon"}
        extra = set(data) - known
        if extra:
            raise DomainError(f"unexpected density fields: {sorted(extra)}")
        return cls(kind=data["kind"], amplitude=float(amp), extent=extent,
                   d=int(data.get("d", 2 if data["kind"] == "disc2" else 3)),
                   R=float(data.get("R", 1.0)), epsilon=data.get("epsilon"))

    @classmethod
    def from_json(cls, text: str) -> "DensitySpec":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class PotentialValue:
    """Potential at one point, tagged with the branch of the closed form used."""

    value: float
    branch: str  # "interior" or "exterior"
    d: int
    R: float


class SuperintegrablePair(NamedTuple):
    """Potential and paired density at one radial angle."""

    potential: float
    density: float


class MassResult(NamedTuple):
    value: float
    divergent: bool


class IdentityCheck(NamedTuple):
    """Both sides of a definite-integral identity."""

    lhs: float
    rhs: float


def _check_source_angle(theta0: float) -> float:
    if not (math.isfinite(theta0) and 0.0 < theta0 < math.pi):
        raise DomainError(f"source radius theta0={theta0} must lie in (0, pi)")
    return float(theta0)


def _check_field_angle(theta: float) -> float:
    if not (math.isfinite(theta) and 0.0 <= theta <= math.pi):
        raise DomainError(f"theta={theta} must lie in [0, pi)")
    if math.pi - theta < _ANTIPODE_GUARD:
        raise SingularityError("the potential diverges at the antipode theta = pi")
    return float(theta)


def _check_R(R: float) -> float:
    if not (math.isfinite(R) and R > 0):
        raise DomainError(f"radius R={R} must be positive")
    return float(R)


def _x_minus_sin(x: float) -> float:
    """x - sin(x) without cancellation for small x."""
    if abs(x) > 0.5:
        return x - math.sin(x)
    term, total, k = x ** 3 / 6.0, 0.0, 1
    while abs(term) > 1e-18 * abs(total) or total == 0.0:
        total += term
        term *= -x * x / ((2 * k + 2) * (2 * k + 3))
        k += 1
        if term == 0.0:
            break
    return total


def _x_cot_minus_one(x: float) -> float:
    """x cot(x) - 1, by its Maclaurin series for small x."""
    if x == 0.0:
        return 0.0
    if abs(x) > 0.1:
        return x / math.tan(x) - 1.0
    x2 = x * x
    # -x^2/3 - x^4/45 - 2x^6/945 - x^8/4725 - 2x^10/93555
    return -x2 * (1 / 3 + x2 * (1 / 45 + x2 * (2 / 945 + x2 * (1 / 4725 + x2 * 2 / 93555))))


# --- uniform 2-disc on S_R^2 ---------------------------------------------

def potential_2disc(rho0: float, R: float, theta0: float, theta: float) -> PotentialValue:
    """Potential of a uniform disc of geodesic radius R theta0 on S_R^2.

    Interior: rho0 R^2 (log cot(theta/2) - cos(theta0) log cot(theta0/2) + log(sin(theta)/sin(theta0))),
    exterior: rho0 R^2 (1 - cos(theta0)) log cot(theta/2). The interior form
    is evaluated as

        rho0 R^2 [log1p(2 sin((theta0+theta)/2) sin((theta0-theta)/2) / (1 + cos(theta0)))
                  + (1 - cos(theta0)) log cot(theta0/2)],

    which is the same function, finite at theta = 0, and accurate for small
    angles.
    """
    R = _check_R(R)
    theta0 = _check_source_angle(theta0)
    theta = _check_field_angle(theta)
    one_minus_c = 2.0 * math.sin(theta0 / 2.0) ** 2
    if theta <= theta0:
        arg = 2.0 * math.sin((theta0 + theta) / 2.0) * math.sin((theta0 - theta) / 2.0) / (1.0 + math.cos(theta0))
        val = math.log1p(arg) + one_minus_c * math.log(1.0 / math.tan(theta0 / 2.0))
        return PotentialValue(rho0 * R * R * val, "interior", 2, R)
    val = one_minus_c * math.log(1.0 / math.tan(theta / 2.0))
    return PotentialValue(rho0 * R * R * val, "exterior", 2, R)


def mass_2disc(rho0: float, R: float, theta0: float) -> float:
    """Total mass 2 pi R^2 (1 - cos theta0) rho0 of the uniform 2-disc."""
    return 4.0 * math.pi * rho0 * R * R * math.sin(theta0 / 2.0) ** 2


def mass_3ball(rho0: float, R: float, theta0: float) -> float:
    """Total mass 2 pi R^3 (theta0 - sin theta0 cos theta0) rho0 of the uniform 3-ball."""
    return math.pi * rho0 * R ** 3 * _x_minus_sin(2.0 * theta0)


def binding_2disc(rho0: float, R: float, theta0: float, variant: str = "corrected") -> float:
    """Binding energy (1/2) int rho Phi of the uniform 2-disc.

    With t = theta0 the energy is

        pi/2 rho0^2 R^4 [(1 - 4 cos t + cos 2t) log cot(t/2) - 4 log cos(t/2)
                         - 2 log sin t + 2 cos t + 2 (log 2 - 1)],

    evaluated in the equivalent form

        2 pi rho0^2 R^4 [-log(1 - u) - u + 2 u^2 log cot(t/2)],  u = sin^2(t/2),

    which has no cancellation as t -> 0. ``variant="printed"`` returns the
    same bracket with pi/4 in front, half the quadrature value.
    """
    if variant not in ("corrected", "printed"):
        raise ValueError(f"unknown variant {variant!r}")
    R = _check_R(R)
    theta0 = _check_source_angle(theta0)
    u = math.sin(theta0 / 2.0) ** 2
    if u < 0.1:
        tail, term, k = 0.0, u * u / 2.0, 2
        while term > 1e-18 * tail or tail == 0.0:
            tail += term
            term *= u * k / (k + 1)
            k += 1
    else:
        tail = -math.log1p(-u) - u
    scale = 2.0 if variant == "corrected" else 1.0
    return scale * math.pi * rho0 ** 2 * R ** 4 * (tail + 2.0 * u * u * math.log(1.0 / math.tan(theta0 / 2.0)))


# --- uniform 3-ball on S_R^3 ---------------------------------------------

def potential_3ball(rho0: float, R: float, theta0: float, theta: float) -> PotentialValue:
    """Potential of a uniform ball of geodesic radius R theta0 on S_R^3.

    Interior (rho0 R^2/2)(theta cot(theta) - cos^2(theta0)), with the limit
    (rho0 R^2/2) sin^2(theta0) at theta = 0; exterior
    (rho0 R^2/2)(theta0 - sin(theta0) cos(theta0)) cot(theta).
    """
    R = _check_R(R)
    theta0 = _check_source_angle(theta0)
    theta = _check_field_angle(theta)
    if theta <= theta0:
        val = _x_cot_minus_one(theta) + math.sin(theta0) ** 2
        return PotentialValue(0.5 * rho0 * R * R * val, "interior", 3, R)
    mass_angle = 0.5 * _x_minus_sin(2.0 * theta0)  # theta0 - sin(theta0) cos(theta0)
    return PotentialValue(0.5 * rho0 * R * R * mass_angle / math.tan(theta), "exterior", 3, R)


def _ball_energy_bracket(t: float) -> float:
    """-4t + 4 sin 2t + sin 4t - 8 t cos 2t, by series for small t."""
    if t > 0.5:
        return -4 * t + 4 * math.sin(2 * t) + math.sin(4 * t) - 8 * t * math.cos(2 * t)
    # Coefficient of t^(2k+1): (-1)^k [2^(2k+3)/(2k+1)! + 4^(2k+1)/(2k+1)! - 2^(2k+3)/(2k)!]
    total, k = 0.0, 2
    while True:
        c = (2.0 ** (2 * k + 3) + 4.0 ** (2 * k + 1)) / math.factorial(2 * k + 1) \
            - 2.0 ** (2 * k + 3) / math.factorial(2 * k)
        term = (-1) ** k * c * t ** (2 * k + 1)
        total += term
        if abs(term) <= 1e-18 * abs(total):
            return total
        k += 1


def binding_3ball(rho0: float, R: float, theta0: float) -> float:
    """Binding energy pi/16 rho0^2 R^5 (-4t + 4 sin 2t + sin 4t - 8t cos 2t) of the 3-ball."""
    R = _check_R(R)
    theta0 = _check_source_angle(theta0)
    return math.pi / 16.0 * rho0 ** 2 * R ** 5 * _ball_energy_bracket(theta0)


# --- curve segment on S_R^3 ----------------------------------------------

def potential_curve_segment(rho0: float, R: float, varphi: float, p: HopfPoint) -> float:
    """Potential of a uniform curve segment on S_R^3 (Hopf coordinates).

    The source lies on the circle vartheta = 0 with phi1 in [-varphi, varphi).
    The result

        Phi = rho0/2 [asinh(cot(vartheta) sin(phi1 + varphi)) - asinh(cot(vartheta) sin(phi1 - varphi))]

    does not depend on phi2 or on R.
    """
    _check_R(R)
    if not (0.0 < varphi <= math.pi):
        raise DomainError(f"half-angle varphi={varphi} must lie in (0, pi]")
    s_plus = math.sin(p.phi1 + varphi)
    s_minus = math.sin(p.phi1 - varphi)
    if p.vartheta == 0.0:
        inside = abs(p.phi1) <= varphi
        if inside or s_plus == 0.0 or s_minus == 0.0 or (s_plus > 0) != (s_minus > 0):
            raise SingularityError("field point lies on the source curve")
        return 0.5 * rho0 * math.copysign(1.0, s_plus) * math.log(abs(s_plus) / abs(s_minus))
    cot = math.cos(p.vartheta) / math.sin(p.vartheta)
    return 0.5 * rho0 * (math.asinh(cot * s_plus) - math.asinh(cot * s_minus))


def curve_segment_quadrature(rho0: float, varphi: float, vartheta: float, phi1: float) -> float:
    """The curve-segment potential as the 1D integral it comes from (oracle)."""
    cot = math.cos(vartheta) / math.sin(vartheta)

    def f(s):
        d = phi1 - s
        return cot * math.cos(d) / math.sqrt(1.0 + (cot * math.sin(d)) ** 2)

    pts = [x for x in (phi1,) if -varphi < x < varphi]
    val, _ = integrate.quad(f, -varphi, varphi, points=pts or None, epsabs=1e-14, epsrel=1e-13, limit=200)
    return 0.5 * rho0 * val


# --- generic axisymmetric convolution ------------------------------------

def _profile(rho_profile) -> tuple[Callable[[float], float], list[float]]:
    """Normalize a density profile into (callable, breakpoints)."""
    if isinstance(rho_profile, DensitySpec):
        spec = rho_profile
        if spec.kind not in ("disc2", "ball3"):
            raise DomainError(f"convolution needs a pole-symmetric volume density, got {spec.kind}")
        t0, r0 = spec.extent, spec.amplitude
        return (lambda t: r0 if t <= t0 else 0.0), [t0]
    if callable(rho_profile):
        return rho_profile, []
    grid, vals = rho_profile
    grid, vals = np.asarray(grid, dtype=float), np.asarray(vals, dtype=float)
    if grid.ndim != 1 or grid.shape != vals.shape or np.any(np.diff(grid) <= 0):
        raise DomainError("tabulated profile needs increasing theta nodes and matching values")
    return (lambda t: float(np.interp(t, grid, vals, left=0.0, right=0.0))), [float(x) for x in grid]


def convolve_axisymmetric(d: int, R: float, rho_profile, theta: float,
                          breakpoints: Sequence[float] = (), tol: float = 1e-12) -> float:
    """Potential of a density that depends only on the polar angle.

    Only the degree-zero part of the kernel survives, so

        Phi(theta) = (2 pi^{d/2} / Gamma(d/2)) int_0^pi G_R^d(theta_>) rho(theta') R^d sin^{d-1}(theta') dtheta'.

    Parameters
    ----------
    rho_profile : callable, DensitySpec, or (theta_nodes, values)
        Density as a function of the polar angle. Tabulated profiles are
        interpolated linearly and vanish outside the nodes.
    breakpoints : sequence of float
        Extra angles where the profile is not smooth.

    Raises
    ------
    ConvergenceError
        If the quadrature does not reach the requested tolerance, which
        signals a non-integrable profile.
    """
    if int(d) != d or d < 2:
        raise DomainError(f"dimension d must be an integer >= 2, got {d}")
    d = int(d)
    R = _check_R(R)
    theta = _check_field_angle(theta)
    rho, bps = _profile(rho_profile)
    norm = normalization(d, R)

    def kernel(t):
        return j_reduce(d, min(max(t, 1e-300), math.pi - 1e-16)) / norm

    def integrand(t):
        big = t if t > theta else theta
        r = rho(t)
        if r == 0.0:
            return 0.0
        return kernel(big) * r * math.sin(t) ** (d - 1)

    cuts = sorted({0.0, math.pi, theta, *[b for b in list(bps) + list(breakpoints) if 0.0 < b < math.pi]})
    total = 0.0
    for a, b in zip(cuts, cuts[1:]):
        if b - a <= 0.0:
            continue
        val, err, info = integrate.quad(integrand, a, b, epsabs=tol * 1e-2, epsrel=tol, limit=200,
                                        full_output=True)[:3]
        if err > max(1e3 * tol * abs(val), 1e-10):
            raise ConvergenceError(f"quadrature failed on [{a:.6g}, {b:.6g}] (error estimate {err:.3g})")
        total += val
    return angular_area(d) * R ** d * total


# --- finite-difference radial Laplacian ----------------------------------

def radial_laplacian(f: Callable[[float], float], d: int, R: float, theta: float, h: float = 1e-3) -> float:
    """Laplace-Beltrami operator on a function of the polar angle only.

    (1/R^2)(f'' + (d - 1) cot(theta) f'), with five-point central differences.
    """
    fm2, fm1, f0, fp1, fp2 = (f(theta + k * h) for k in (-2, -1, 0, 1, 2))
    d1 = (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h)
    d2 = (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * h * h)
    return (d2 + (d - 1) * d1 / math.tan(theta)) / (R * R)


# --- superintegrable pairs -----------------------------------------------

def oscillator_pair(d: int, R: float, alpha: float, theta: float) -> SuperintegrablePair:
    """Oscillator potential alpha tan^2(theta) and its density -Delta Phi.

    The density is -(2 alpha / R^2)(1 + tan^2 theta)(3 tan^2 theta + d).
    """
    if int(d) != d or d < 2:
        raise DomainError(f"dimension d must be an integer >= 2, got {d}")
    R = _check_R(R)
    if not (0.0 <= theta <= math.pi):
        raise DomainError(f"theta={theta} must lie in [0, pi]")
    if abs(math.cos(theta)) < 1e-12:
        raise SingularityError("the oscillator potential diverges at theta = pi/2")
    t2 = math.tan(theta) ** 2
    return SuperintegrablePair(alpha * t2, -2.0 * alpha / R ** 2 * (1.0 + t2) * (3.0 * t2 + d))


def kepler_pair(d: int, R: float, alpha: float, theta: float,
                epsilon: float | None = None) -> SuperintegrablePair:
    """Kepler-Coulomb potential and its density.

    For d >= 3 the potential is -alpha cot(theta) with density
    (3 - d)(alpha / R^2) cot(theta)(1 + cot^2 theta). On S_R^2 the
    regularized pair

        Phi = alpha cot(theta) + alpha cot(eps) + (alpha / sin eps) log tan(eps/2),
        rho = -(alpha / R^2) cot(theta)(1 + cot^2 theta) + (point source at the pole)

    is returned; the point source is not evaluated pointwise, see
    :func:`kepler_delta_coefficient`.
    """
    if int(d) != d or d < 2:
        raise DomainError(f"dimension d must be an integer >= 2, got {d}")
    R = _check_R(R)
    if not (0.0 < theta < math.pi):
        raise SingularityError(f"the Kepler pair is singular at theta={theta} (needs 0 < theta < pi)")
    cot = math.cos(theta) / math.sin(theta)
    if d == 2:
        if not (epsilon and 0.0 < epsilon < math.pi / 2):
            raise DomainError("the d = 2 pair needs a regularization angle 0 < epsilon < pi/2")
        const = alpha / math.tan(epsilon) + alpha / math.sin(epsilon) * math.log(math.tan(epsilon / 2.0))
        return SuperintegrablePair(alpha * cot + const, -alpha / R ** 2 * cot * (1.0 + cot * cot))
    return SuperintegrablePair(-alpha * cot, (3 - d) * alpha / R ** 2 * cot * (1.0 + cot * cot))


def kepler_delta_coefficient(d: int, alpha: float, epsilon: float | None = None) -> float:
    """Strength c of the point source c delta(theta)/sin(theta) in the d = 2 Kepler density.

    c = 2 alpha / sin(eps) for d = 2 and zero otherwise. The d = 3 potential is
    itself a multiple of the fundamental solution, so its source is a pure
    point source at the pole and has no smooth part.
    """
    if d != 2:
        return 0.0
    if not (epsilon and epsilon > 0):
        raise DomainError("the d = 2 pair needs a regularization angle epsilon > 0")
    return 2.0 * alpha / math.sin(epsilon)


def oscillator_total_mass(d: int, R: float, alpha: float) -> MassResult:
    """Total mass of the oscillator density: always divergent (non-integrable at theta = pi/2)."""
    return MassResult(math.copysign(math.inf, -alpha), True)


def kepler_total_mass(d: int, R: float, alpha: float, epsilon: float) -> MassResult:
    """Mass of the smooth Kepler density on theta in [eps, pi - eps]."""
    if not (0.0 < epsilon < math.pi / 2):
        raise DomainError(f"epsilon={epsilon} must lie in (0, pi/2)")

    def f(t):
        return kepler_pair(d, R, alpha, t, epsilon if d == 2 else None).density * math.sin(t) ** (d - 1)

    val, _ = integrate.quad(f, epsilon, math.pi - epsilon, points=[math.pi / 2], epsabs=1e-13, limit=200)
    return MassResult(angular_area(d) * R ** d * val, False)


def _q_diag(d: int, x: float) -> float:
    nu = d / 2.0 - 1.0
    return ferrers_Q((nu, -nu), x)


def oscillator_identity_rhs(d: int, theta: float) -> float:
    """Closed-form side of the oscillator definite integral."""
    t = math.tan(theta)
    return (-t * (1.0 + t * t) * math.sin(theta) ** (d / 2.0) * _q_diag(d, math.cos(theta))
            - 2.0 ** (d / 2.0 - 2.0) * math.gamma(d / 2.0) * t * t / math.factorial(d - 2))


def oscillator_identity_lhs(d: int, theta: float, window: float = 0.5) -> float:
    """int_theta^pi Q_{d/2-1}^{1-d/2}(cos t)(1 + tan^2 t)(3 tan^2 t + d) sin^{d/2}(t) dt by quadrature.

    The integrand has a fourth-order pole at t = pi/2. Pairing t = pi/2 +- x
    cancels the odd part of the Laurent expansion; the remaining even part
    phi(x)/x^4 is integrated in the finite-part (Hadamard) sense over a
    window |x| < a by fitting phi with a polynomial in x^2, and ordinary
    quadrature covers the rest of the path.
    """
    if int(d) != d or d < 2:
        raise DomainError(f"dimension d must be an integer >= 2, got {d}")
    if not (0.0 < theta < math.pi):
        raise DomainError(f"theta={theta} must lie in (0, pi)")
    half = math.pi / 2.0
    if abs(theta - half) < 1e-12:
        raise SingularityError("the identity is singular at theta = pi/2")

    def g(t):
        tn = math.tan(t)
        return _q_diag(d, math.cos(t)) * (1.0 + tn * tn) * (3.0 * tn * tn + d) * math.sin(t) ** (d / 2.0)

    opts = dict(limit=200, epsabs=1e-13, epsrel=1e-13)
    if theta > half:
        return integrate.quad(g, theta, math.pi, **opts)[0]

    a = min(window, half - theta)

    def phi_even(x):
        def one(y):
            s, c = math.sin(y), math.cos(y)
            return _q_diag(d, -s) * c ** (d / 2.0) * (3.0 * c * c + d * s * s) * (y / s) ** 4
        return 0.5 * (one(x) + one(-x))

    n = 64
    z = 0.5 * (1.0 - np.cos(np.pi * (np.arange(n) + 0.5) / n))  # z = x^2 / a^2 in (0, 1)
    vals = np.array([phi_even(a * math.sqrt(zz)) for zz in z])
    coef = Chebyshev.fit(z, vals, 16, domain=[0.0, 1.0]).convert(kind=Polynomial, domain=[0.0, 1.0]).coef
    window_part = 2.0 * sum(ck / (a ** 3 * (2 * k - 3)) for k, ck in enumerate(coef))
    rest = integrate.quad(g, half + a, math.pi, **opts)[0]
    if theta < half - a:
        rest += integrate.quad(g, theta, half - a, **opts)[0]
    return window_part + rest


def oscillator_identity(d: int, theta: float) -> IdentityCheck:
    return IdentityCheck(oscillator_identity_lhs(d, theta), oscillator_identity_rhs(d, theta))


def kepler_identity_rhs(d: int, theta: float) -> float:
    """Closed-form side of the Kepler-Coulomb definite integral (d >= 4)."""
    cot = 1.0 / math.tan(theta)
    return (-math.sin(theta) ** (d / 2.0 - 2.0) * _q_diag(d, math.cos(theta)) / (d - 3)
            + 2.0 ** (d / 2.0 - 1.0) * math.gamma(d / 2.0) * cot / ((d - 3) * math.factorial(d - 2)))


def kepler_identity_lhs(d: int, theta: float, window: float = 0.5) -> float:
    """int_theta^pi Q_{d/2-1}^{1-d/2}(cos t)(1 + cot^2 t) cot(t) sin^{d/2}(t) dt by quadrature.

    Near t = pi the integrand behaves like c / (pi - t)^2, so the integral is
    taken as a Hadamard finite part at that endpoint. On a window
    x = pi - t < a the integrand is written through Q_nu^{-nu}(cos x) =
    K sin^nu(x) J_d(x), with nu = d/2 - 1 and K = 2^nu Gamma(d/2)/(d-2)!, and
    the reduction of J_d splits it into c csc^2(x), whose finite part is
    -c cot(a), plus a remainder that is at most log-singular.
    """
    if int(d) != d or d < 4:
        raise DomainError(f"the Kepler identity needs d >= 4, got {d}")
    if not (0.0 < theta < math.pi):
        raise DomainError(f"theta={theta} must lie in (0, pi)")
    nu = d / 2.0 - 1.0
    c = 2.0 ** nu * math.gamma(d / 2.0) / math.factorial(d - 2) / (d - 2)

    def g(t):
        cot = 1.0 / math.tan(t)
        return _q_diag(d, math.cos(t)) * (1.0 + cot * cot) * cot * math.sin(t) ** (d / 2.0)

    def remainder(x):
        return -c + c * (d - 3) * math.cos(x) * math.sin(x) ** (d - 4) * j_reduce(d - 2, x)

    opts = dict(limit=200, epsabs=1e-13, epsrel=1e-13)
    a = min(window, math.pi - theta)
    total = -c / math.tan(a) + integrate.quad(remainder, 0.0, a, **opts)[0]
    if theta < math.pi - a:
        total += integrate.quad(g, theta, math.pi - a, **opts)[0]
    return total


def kepler_identity(d: int, theta: float) -> IdentityCheck:
    return IdentityCheck(kepler_identity_lhs(d, theta), kepler_identity_rhs(d, theta))


# --- Euclidean counterparts ----------------------------------------------

def flat_constant_2disc(rho0: float, r0: float, R: float) -> float:
    """Constant c_R = (rho0 r0^2 / 2) log(2R) removed from the S_R^2 potential in the flat limit."""
    return 0.5 * rho0 * r0 * r0 * math.log(2.0 * R)


def euclidean_2disc_potential(rho0: float, r0: float, r: float) -> float:
    """Potential of a uniform disc of radius r0 in R^2."""
    if r <= r0:
        return -0.25 * rho0 * (r * r - r0 * r0 + 2.0 * r0 * r0 * math.log(r0))
    return -0.5 * rho0 * r0 * r0 * math.log(r)


def euclidean_3ball_potential(rho0: float, r0: float, r: float) -> float:
    """Potential of a uniform ball of radius r0 in R^3."""
    if r <= r0:
        return rho0 / 6.0 * (3.0 * r0 * r0 - r * r)
    return rho0 * r0 ** 3 / (3.0 * r)


def euclidean_segment_potential(rho0: float, L: float, r: float, z: float) -> float:
    """Potential of a uniform line segment z' in [-L, L] on the z-axis of R^3 (cylindrical r, z)."""
    if r <= 0.0:
        raise SingularityError("field point on the axis of the segment")
    return 0.5 * rho0 * (math.asinh((z + L) / r) - math.asinh((z - L) / r))


def euclidean_binding_2disc(rho0: float, r0: float, R: float | None = None,
                            correction: str = "derived") -> float:
    """Binding energy pi/16 rho0^2 r0^4 (1 - 4 log r0) of a uniform disc in R^2.

    With ``R`` given, add the leading curvature term of the S_R^2 energy
    after removing c_R times half the exact disc mass:

        "derived": (r0^2 / (3 R^2)) (2 log r0 - log(2R) - 1)
        "printed": (r0^2 / (6 R^2)) (2 log(r0/2) - 1)

    Only the derived term leaves an O(R^-4) remainder.
    """
    if correction not in ("derived", "printed"):
        raise ValueError(f"unknown correction {correction!r}")
    val = -4.0 * math.log(r0) + 1.0
    if R is not None:
        if correction == "derived":
            val += r0 * r0 / (3.0 * R * R) * (2.0 * math.log(r0) - math.log(2.0 * R) - 1.0)
        else:
            val += r0 * r0 / (6.0 * R * R) * (2.0 * math.log(r0 / 2.0) - 1.0)
    return math.pi / 16.0 * rho0 ** 2 * r0 ** 4 * val


def euclidean_binding_3ball(rho0: float, r0: float, R: float | None = None) -> float:
    """Binding energy 4 pi/15 rho0^2 r0^5 of a uniform ball in R^3; with R, include the curvature term."""
    val = 1.0
    if R is not None:
        val -= 13.0 / 21.0 * r0 * r0 / (R * R)
    return 4.0 * math.pi / 15.0 * rho0 ** 2 * r0 ** 5 * val
