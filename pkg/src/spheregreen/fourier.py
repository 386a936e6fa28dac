"""Azimuthal Fourier coefficients of the normalized hypersphere kernel.

With psi = phi - phi' the separation cosine is ``B cos(psi) + A`` and the
normalized kernel ``g^d = J_d(Theta)`` is expanded as

    g^d = sum_m G_m cos(m psi),   G_m = (eps_m / pi) int_0^pi g^d cos(m psi) dpsi,

where eps_0 = 1 and eps_m = 2 otherwise. The Neumann factor is applied once,
inside the coefficient; reconstruction sums use plain cosine weights.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import asdict, dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Iterable, Sequence

from scipy import integrate

from .config import DEFAULT_CONFIG, ExpansionConfig
from .errors import ConvergenceError, DomainError, SingularityError
from .fundsol import J_d
from .geometry import ab_from_angles
from .specfun.elliptic import K_GUARD, elliptic_E, elliptic_K, elliptic_Pi
from .specfun.extended import complete_kepi, with_digits
from .specfun.hypergeometric import pochhammer

EPS = 2.220446049250313e-16
B_DEGENERATE = 1e-12
_MAX_DIGITS = 2000


@dataclass(frozen=True)
class FourierCoefficient:
    """One azimuthal Fourier coefficient with provenance and error estimate."""

    m: int
    value: float
    method: str
    est_error: float


@dataclass(frozen=True)
class S2LogTerms:
    """The ratios z_(+/-) = sin(t) sin(t') / (1 +/- cos(t) cos(t'))."""

    z_plus: float
    z_minus: float


@dataclass(frozen=True)
class EllipticData:
    """Parameters of the elliptic reduction of the S^3 coefficient integral.

    ``kc2`` is 1 - k^2 computed without cancellation.
    """

    alpha2: float
    alpha1_2: float
    k2: float
    g: float
    phi: float
    u1: float
    kc2: float

    @property
    def k(self) -> float:
        return math.sqrt(self.k2)


def neumann(m: int) -> int:
    """Neumann factor eps_m."""
    return 1 if m == 0 else 2


def _check_order(m: int) -> int:
    if int(m) != m or m < 0:
        raise DomainError(f"Fourier order must be a nonnegative integer, got {m}")
    return int(m)


# ---------------------------------------------------------------- S^2 -----

def s2_log_terms(theta: float, theta_p: float) -> S2LogTerms:
    """z_(+/-) for a pair of polar angles."""
    ss = math.sin(theta) * math.sin(theta_p)
    cc = math.cos(theta) * math.cos(theta_p)
    zp = ss / (1.0 + cc) if 1.0 + cc > 0 else 0.0
    zm = ss / (1.0 - cc) if 1.0 - cc > 0 else 0.0
    return S2LogTerms(zp, zm)


def fourier_coeff_s2(n: int, theta: float, theta_p: float) -> FourierCoefficient:
    """Closed-form Fourier coefficient of log cot(Theta/2) on the unit 2-sphere.

    With t = tan(theta/2), theta_< / theta_> the smaller / larger polar
    angle and beta = min(t_< t_>, 1 / (t_< t_>)), the coefficient is

        n = 0:   log cot(theta_>/2)  if theta_< + theta_> <= pi, else log tan(theta_</2),
        n >= 1:  ((t_< / t_>)^n - (-1)^n beta^n) / n.

    For theta_< + theta_> <= pi, beta = t_< t_> and the n >= 1 formula reads
    t_<^n (t_>^-n - (-1)^n t_>^n) / n. The second branch is needed because the
    kernel is also singular at the antipode of the source.

    Raises
    ------
    SingularityError
        If the circle of field points passes through the source or its
        antipode for every psi (theta_< = 0 with theta_> in {0, pi}, or
        theta_< = theta_> = pi).
    """
    n = _check_order(n)
    for t in (theta, theta_p):
        if not 0.0 <= t <= math.pi:
            raise DomainError(f"polar angle {t} outside [0, pi]")
    lo, hi = min(theta, theta_p), max(theta, theta_p)
    if (lo == 0.0 and hi in (0.0, math.pi)) or lo == math.pi:
        raise SingularityError(f"kernel is singular on the whole circle (theta_<={lo}, theta_>={hi})")
    far = lo + hi > math.pi
    if n == 0:
        val = math.log(math.tan(lo / 2.0)) if far else -math.log(math.tan(hi / 2.0))
        return FourierCoefficient(0, val, "closed_form", 4 * EPS * (abs(val) + 1.0))
    if lo == 0.0 or hi == math.pi:
        return FourierCoefficient(n, 0.0, "closed_form", 0.0)
    tl, th = math.tan(lo / 2.0), math.tan(hi / 2.0)
    beta = 1.0 / (tl * th) if far else tl * th
    val = (tl / th) ** n / n - (-1) ** n * beta ** n / n
    return FourierCoefficient(n, val, "closed_form", 4 * (n + 1) * EPS * (abs(val) + 1e-300))


def g2_direct(theta: float, theta_p: float, psi: float) -> float:
    """Normalized 2-sphere kernel log cot(Theta/2) for azimuth difference psi."""
    c = math.cos(theta) * math.cos(theta_p) + math.sin(theta) * math.sin(theta_p) * math.cos(psi)
    if c >= 1.0 - 1e-16:
        raise SingularityError("coincident points")
    return 0.5 * math.log((1.0 + c) / (1.0 - c))


def fourier_sum_s2(theta: float, theta_p: float, psi: float, N: int) -> float:
    """Partial Fourier sum up to order N on the 2-sphere."""
    if N < 0:
        raise DomainError("truncation N must be >= 0")
    return math.fsum(fourier_coeff_s2(n, theta, theta_p).value * math.cos(n * psi)
                     for n in range(N + 1))


# ------------------------------------------------------------ quadrature -----

def _kernel_on_circle(d: int, A: float, B: float, psi: float) -> float:
    c = A + B * math.cos(psi)
    c = min(1.0, max(-1.0, c))
    return J_d(d, math.acos(c))


def fourier_coeff_quadrature_ab(d: int, m: int, A: float, B: float,
                                tol: float = 1e-12) -> FourierCoefficient:
    """Quadrature oracle for the coefficient of J_d(Theta) with cos(Theta) = A + B cos(psi)."""
    m = _check_order(m)
    if B < 0:
        raise DomainError(f"B={B} must be >= 0")
    if 1.0 - (A + B) < 1e-14:
        raise SingularityError("source and field point coincide at psi = 0")
    if d >= 3 and 1.0 + (A - B) < 1e-14:
        raise SingularityError("field point antipodal to the source at psi = pi")
    eps_m = neumann(m)
    if B == 0.0:
        val = J_d(d, math.acos(A)) if m == 0 else 0.0
        return FourierCoefficient(m, val, "quadrature", 0.0)
    f = lambda psi: _kernel_on_circle(d, A, B, psi) * math.cos(m * psi)
    val, err = integrate.quad(f, 0.0, math.pi, epsabs=tol, epsrel=tol, limit=400)
    return FourierCoefficient(m, eps_m / math.pi * val, "quadrature", eps_m / math.pi * err)


def fourier_coeff_quadrature(d: int, m: int, theta: float, theta_p: float,
                             mids: Sequence[float] = (), mids_p: Sequence[float] = (),
                             tol: float = 1e-12) -> FourierCoefficient:
    """Oracle Fourier coefficient of the normalized kernel on S^d by adaptive quadrature.

    Parameters
    ----------
    d : int
        Dimension, at least 2.
    m : int
        Azimuthal order.
    theta, theta_p : float
        Radial angles of the two points.
    mids, mids_p : sequence of float
        Intermediate angles theta_2..theta_{d-1} of each point.
    tol : float
        Absolute and relative tolerance requested from the integrator.
    """
    if len(mids) != d - 2 or len(mids_p) != d - 2:
        raise DomainError(f"d={d} needs {d - 2} intermediate angles per point")
    A, B = ab_from_angles(theta, theta_p, mids, mids_p)
    return fourier_coeff_quadrature_ab(d, m, A, B, tol)


# ------------------------------------------------------------------ S^3 -----

def elliptic_data(A: float, B: float) -> EllipticData:
    """Elliptic parameters for the S^3 coefficient integral.

    alpha^2 = 2B/(1-A+B), alpha_1^2 = 2(1-A)/(1-A+B),
    k^2 = 4B/((1+A+B)(1-A+B)), g = 2B/sqrt((1+A+B)(1-A+B)), phi = pi/2,
    u_1 = K(k).

    Raises
    ------
    SingularityError
        If k^2 is within the guard band of 1 (the points meet at psi = 0, or
        are antipodal at psi = pi).
    """
    if not (math.isfinite(A) and math.isfinite(B)):
        raise DomainError("A and B must be finite")
    if B < 0:
        raise DomainError(f"B={B} must be >= 0")
    if abs(A) >= 1.0 and B == 0.0:
        raise SingularityError(f"|A|={abs(A)} >= 1 with B = 0: coincident or antipodal points")
    p, q = 1.0 + A + B, 1.0 - A + B
    num = (1.0 - A - B) * (1.0 + A - B)
    kc2 = num / (p * q)
    if kc2 < K_GUARD:
        raise SingularityError(f"1 - k^2 = {kc2:.3g} below guard band: coincidence singularity")
    k2 = 4.0 * B / (p * q)
    return EllipticData(alpha2=2.0 * B / q, alpha1_2=2.0 * (1.0 - A) / q, k2=k2,
                        g=2.0 * B / math.sqrt(p * q), phi=math.pi / 2,
                        u1=elliptic_K(math.sqrt(k2)), kc2=kc2)


def v_sequence(j_max: int, ed: EllipticData, literal: bool = False) -> list[float]:
    """V_j(alpha, k) = int_0^{pi/2} (1 - a2 sin^2 t)^-j (1 - k2 sin^2 t)^-1/2 dt.

    V_0 = K, V_1 = Pi(alpha^2, k), V_2 from the closed form in K, E and Pi,
    and higher members from the three-term recurrence

        2(j+2)(1-a2)(k2-a2) V_{j+3} = (2j+1) k2 V_j
            + 2(j+1)(a2 k2 + a2 - 3 k2) V_{j+1}
            + (2j+3)(a2^2 - 2 a2 k2 - 2 a2 + 3 k2) V_{j+2}.

    ``literal=True`` reproduces a variant with V_{j+1} in the last slot and
    (a2 - 1) in the denominator; it exists only to document that it fails
    the quadrature check.
    """
    return v_values(j_max, ed.alpha2, ed.k2, literal)


def v_values(j_max: int, alpha2: float, k2: float, literal: bool = False) -> list[float]:
    """V_0..V_{j_max} for explicit (alpha^2, k^2); see :func:`v_sequence`."""
    a2 = alpha2
    if not (0.0 <= k2 < 1.0) or not math.isfinite(a2):
        raise DomainError(f"need 0 <= k^2 < 1 and finite alpha^2, got alpha^2={a2}, k^2={k2}")
    if j_max < 0:
        raise DomainError("j_max must be >= 0")
    if abs(a2 - 1.0) < 1e-14 or abs(a2 - k2) < 1e-14 * max(1.0, k2):
        raise DomainError(f"degenerate elliptic parameters alpha^2={a2}, k^2={k2}")
    k = math.sqrt(k2)
    V = [elliptic_K(k), elliptic_Pi(a2, k)]
    V.append(((k2 - a2) * V[0] + a2 * elliptic_E(k)
              + (2 * a2 * k2 + 2 * a2 - a2 * a2 - 3 * k2) * V[1]) / (2 * (a2 - 1) * (k2 - a2)))
    for j in range(0, j_max - 2):
        c0 = (2 * j + 1) * k2
        c1 = 2 * (j + 1) * (a2 * k2 + a2 - 3 * k2)
        c2 = (2 * j + 3) * (a2 * a2 - 2 * a2 * k2 - 2 * a2 + 3 * k2)
        if literal:
            V.append((c0 * V[j] + c1 * V[j + 1] + c2 * V[j + 1]) / (2 * (j + 2) * (a2 - 1) * (k2 - a2)))
        else:
            V.append((c0 * V[j] + c1 * V[j + 1] + c2 * V[j + 2]) / (2 * (j + 2) * (1 - a2) * (k2 - a2)))
    return V[: j_max + 1]


def v_quadrature(j: int, alpha2: float, k2: float) -> float:
    """Quadrature oracle for V_j."""
    f = lambda t: (1.0 - alpha2 * math.sin(t) ** 2) ** (-j) / math.sqrt(1.0 - k2 * math.sin(t) ** 2)
    return integrate.quad(f, 0.0, math.pi / 2, epsabs=1e-14, epsrel=1e-14, limit=200)[0]


def a_coeffs(m: int, A: float, B: float) -> list[float]:
    """Power-basis coefficients of (x + A/B) T_m(x), from the Pochhammer form.

    The two branches are p = m, m-2, ... (carrying the factor A/B) and
    p = m+1, m-1, ... down to m - 2 floor(m/2) + 1.
    """
    m = _check_order(m)
    if not B > 0:
        raise DomainError(f"a_coeffs needs B > 0, got {B}")
    a = [0.0] * (m + 2)
    pre = pochhammer(m, m) / (2.0 ** m * pochhammer(0.5, m))
    for p in range(m + 2):
        if p <= m and (m - p) % 2 == 0:
            k = (m - p) // 2
            a[p] = A / B * pre * pochhammer(-m / 2.0, k) * pochhammer((1 - m) / 2.0, k) / (
                pochhammer(1 - m, k) * math.factorial(k))
        elif (m - p + 1) % 2 == 0 and p >= m - 2 * (m // 2) + 1:
            k = (m - p + 1) // 2
            a[p] = pre * pochhammer(-m / 2.0, k) * pochhammer((1 - m) / 2.0, k) / (
                pochhammer(1 - m, k) * math.factorial(k))
    return a


def _s3_sum_terms(m, A, B, V, a, one=1.0):
    """Terms a_p C(p, j) (B - 1 + A)^j (1 - A)^(p - j) B^-p V_j of the double sum."""
    terms = []
    for p in range(m + 2):
        if a[p] == 0:
            continue
        for j in range(p + 1):
            terms.append(a[p] * (B - one + A) ** j * (one - A) ** (p - j) / B ** p
                         * math.comb(p, j) * V[j])
    return terms


def _s3_sum_extended(m: int, A: float, B: float, digits: int, literal_recurrence: bool):
    """Double sum of the S^3 closed form evaluated with ``digits`` significant digits."""
    with with_digits(digits):
        Ad, Bd = Decimal(A), Decimal(B)       # exact binary values
        one = Decimal(1)
        q = one - Ad + Bd
        a2 = 2 * Bd / q
        k2 = 4 * Bd / ((one + Ad + Bd) * q)
        K, E, Pi = complete_kepi(k2, a2, digits)
        V = [K, Pi, ((k2 - a2) * K + a2 * E + (2 * a2 * k2 + 2 * a2 - a2 * a2 - 3 * k2) * Pi)
             / (2 * (a2 - 1) * (k2 - a2))]
        for j in range(0, m - 1):
            c0 = (2 * j + 1) * k2
            c1 = 2 * (j + 1) * (a2 * k2 + a2 - 3 * k2)
            c2 = (2 * j + 3) * (a2 * a2 - 2 * a2 * k2 - 2 * a2 + 3 * k2)
            last = V[j + 1] if literal_recurrence else V[j + 2]
            den = (a2 - 1) if literal_recurrence else (1 - a2)
            V.append((c0 * V[j] + c1 * V[j + 1] + c2 * last) / (2 * (j + 2) * den * (k2 - a2)))
        return sum(_s3_sum_terms(m, Ad, Bd, V, _a_coeffs_exact(m, Ad, Bd), one))


def _a_coeffs_exact(m: int, A, B):
    """a_p as Decimals, with the Pochhammer ratios formed in exact rationals."""
    out = [0] * (m + 2)
    pre = _poch_q(Fraction(m), m) / (2 ** m * _poch_q(Fraction(1, 2), m))
    for p in range(m + 2):
        if p <= m and (m - p) % 2 == 0:
            k = (m - p) // 2
            c = pre * _poch_q(Fraction(-m, 2), k) * _poch_q(Fraction(1 - m, 2), k) / (
                _poch_q(Fraction(1 - m), k) * math.factorial(k))
            out[p] = A / B * Decimal(c.numerator) / Decimal(c.denominator)
        elif (m - p + 1) % 2 == 0 and p >= m - 2 * (m // 2) + 1:
            k = (m - p + 1) // 2
            c = pre * _poch_q(Fraction(-m, 2), k) * _poch_q(Fraction(1 - m, 2), k) / (
                _poch_q(Fraction(1 - m), k) * math.factorial(k))
            out[p] = Decimal(c.numerator) / Decimal(c.denominator)
    return out


def _poch_q(a: Fraction, n: int) -> Fraction:
    out = Fraction(1)
    for i in range(n):
        out *= a + i
    return out


def _s3_sum_converged(m: int, A: float, B: float, pref: float, scale: float, val: float,
                        literal_recurrence: bool) -> tuple[float, float]:
    """Redo the double sum in decimal arithmetic, raising the precision until two runs agree.

    The starting precision absorbs the cancellation visible in the terms;
    the upward V_j recurrence can lose more, which the comparison catches.
    """
    digits = 20 + max(0, math.ceil(math.log10(scale / max(abs(val), 1e-300) + 1.0)))
    prev = _s3_sum_extended(m, A, B, digits, literal_recurrence)
    while True:
        digits = digits + 10 + digits // 2
        cur = _s3_sum_extended(m, A, B, digits, literal_recurrence)
        diff = abs(float(cur - prev))
        if diff <= 1e-17 * abs(float(cur)) or digits >= _MAX_DIGITS:
            break
        prev = cur
    out = pref * float(cur)
    est = 4 * EPS * abs(out) + abs(pref) * diff
    if diff > 1e-17 * abs(float(cur)):
        raise ConvergenceError(f"S^3 coefficient m={m} not resolved with {digits} digits (A={A}, B={B})")
    return out, est


def fourier_coeff_s3_ab(m: int, A: float, B: float, prefactor: str = "derived",
                        precision: str = "auto", config: ExpansionConfig | None = None,
                        literal_recurrence: bool = False) -> FourierCoefficient:
    """Elliptic-integral closed form of the S^3 coefficient for given (A, B).

    The coefficient is

        G_m = 2 B eps_m / (pi sqrt((1+A+B)(1-A+B)))
              * sum_{p=0}^{m+1} sum_{j=0}^{p} a_p C(p, j) (B-1+A)^j (1-A)^(p-j) B^-p V_j.

    Parameters
    ----------
    prefactor : {"derived", "printed"}
        "derived" is the normalization above, which matches quadrature;
        "printed" puts sqrt((1-A+B)(1+A-B)) under the radical instead.
    precision : {"auto", "double", "extended"}
        The double sum cancels heavily when B is small (terms grow like
        B^-(m+1) while G_m shrinks like B^m). "double" always uses floats
        and reports the cancellation in ``est_error``; "extended" redoes the
        sum in decimal arithmetic with enough digits for a full-precision
        result; "auto" escalates only when the double estimate exceeds
        1e-12 relative.
    """
    cfg = config or DEFAULT_CONFIG
    m = _check_order(m)
    if prefactor not in ("derived", "printed"):
        raise ValueError(f"unknown prefactor variant {prefactor!r}")
    if precision not in ("auto", "double", "extended"):
        raise ValueError(f"unknown precision mode {precision!r}")
    if B < cfg.guard:
        # Theta no longer depends on psi.
        if m == 0:
            if abs(A) >= 1.0:
                raise SingularityError("coincident or antipodal points with B = 0")
            val = A / math.sqrt((1.0 - A) * (1.0 + A))
            return FourierCoefficient(0, val, "closed_form", 4 * EPS * abs(val))
        return fourier_coeff_quadrature_ab(3, m, A, B)
    ed = elliptic_data(A, B)
    V = v_sequence(m + 1, ed, literal=literal_recurrence)
    a = a_coeffs(m, A, B)
    terms = _s3_sum_terms(m, A, B, V, a)
    s = math.fsum(terms)
    if prefactor == "derived":
        den = (1.0 + A + B) * (1.0 - A + B)
    else:
        den = (1.0 - A + B) * (1.0 + A - B)
    pref = 2.0 * B * neumann(m) / (math.pi * math.sqrt(den))
    val = pref * s
    scale = pref * max(abs(t) for t in terms)
    est = 16 * EPS * (m + 2) * scale + 4 * EPS * abs(val)
    if precision == "extended" or (precision == "auto" and est > 1e-12 * max(1.0, abs(val))):
        val, est = _s3_sum_converged(m, A, B, pref, scale, val, literal_recurrence)
    return FourierCoefficient(m, val, "elliptic", est)


def fourier_coeff_s3(m: int, theta: float, theta_p: float, theta2: float, theta2_p: float,
                     prefactor: str = "derived", precision: str = "auto",
                     config: ExpansionConfig | None = None) -> FourierCoefficient:
    """Fourier coefficient G_m of 4 pi R G_R^3 on S^3 via complete elliptic integrals.

    The angles are the radial and intermediate angles of the two points;
    see :func:`fourier_coeff_s3_ab` for the options.
    """
    A, B = ab_from_angles(theta, theta_p, [theta2], [theta2_p])
    return fourier_coeff_s3_ab(m, A, B, prefactor=prefactor, precision=precision, config=config)


def _m0_closed(A: float, B: float) -> float:
    ed = elliptic_data(A, B)
    k = math.sqrt(ed.k2)
    return 2.0 / math.pi * (elliptic_K(k) + (A + B - 1.0) * elliptic_Pi(ed.alpha2, k)) / math.sqrt(
        (1.0 + A + B) * (1.0 - A + B))


def fourier_coeff_s3_m0(theta: float, theta_p: float, theta2: float, theta2_p: float,
                        variant: str = "corrected") -> float:
    """m = 0 coefficient from K and Pi alone.

    With A + B = cos t cos t' + sin t sin t' cos(t2 - t2') and
    A - B = cos t cos t' + sin t sin t' cos(t2 + t2'),

        G_0 = (2/pi) [K(k) + (A + B - 1) Pi(alpha^2, k)] / sqrt((1+A+B)(1-A+B)).

    ``variant="printed"`` instead multiplies by sqrt((1+A-B)(1-A+B)); it is
    kept for the comparison suite only.
    """
    A, B = ab_from_angles(theta, theta_p, [theta2], [theta2_p])
    if B < B_DEGENERATE:
        return fourier_coeff_s3_ab(0, A, B).value
    if variant == "corrected":
        return _m0_closed(A, B)
    if variant == "printed":
        ed = elliptic_data(A, B)
        k = math.sqrt(ed.k2)
        return 2.0 / math.pi * (elliptic_K(k) + (A + B - 1.0) * elliptic_Pi(ed.alpha2, k)) * math.sqrt(
            (1.0 + A - B) * (1.0 - A + B))
    raise ValueError(f"unknown variant {variant!r}")


def fourier_coeff_s3_m0_hopf(vartheta: float, vartheta_p: float, phi1: float, phi1_p: float) -> float:
    """m = 0 coefficient in Hopf coordinates.

    Here A = cos v cos v' cos(phi1 - phi1'), B = sin v sin v', and the
    expansion variable is phi2 - phi2'.
    """
    A = math.cos(vartheta) * math.cos(vartheta_p) * math.cos(phi1 - phi1_p)
    B = math.sin(vartheta) * math.sin(vartheta_p)
    if B < B_DEGENERATE:
        return fourier_coeff_s3_ab(0, A, B).value
    ed = elliptic_data(A, B)
    k = math.sqrt(ed.k2)
    return 2.0 / math.pi * (elliptic_K(k) / math.sqrt((1 - A + B) * (1 + A + B))
                            + (A + B - 1.0) * elliptic_Pi(ed.alpha2, k) / math.sqrt((A + B + 1) * (1 - A + B)))


def euclidean_m0_coeff(r: float, r_p: float, theta: float, theta_p: float) -> float:
    """m = 0 Fourier term of the Euclidean kernel N^3 in spherical coordinates.

    N^3|_{m=0} = K(k) / (2 pi^2 sqrt(rho)), rho = r^2 + r'^2 - 2 r r' cos(theta + theta'),
    k^2 = 4 r r' sin(theta) sin(theta') / rho.
    """
    rho = r * r + r_p * r_p - 2.0 * r * r_p * math.cos(theta + theta_p)
    k2 = 4.0 * r * r_p * math.sin(theta) * math.sin(theta_p) / rho
    return elliptic_K(math.sqrt(k2)) / (2.0 * math.pi ** 2 * math.sqrt(rho))


def fourier_sum_s3(theta, theta_p, theta2, theta2_p, psi, M: int) -> float:
    """Reconstruction sum_{m <= M} G_m cos(m psi) of the normalized S^3 kernel (cot Theta)."""
    return math.fsum(fourier_coeff_s3(m, theta, theta_p, theta2, theta2_p).value * math.cos(m * psi)
                     for m in range(M + 1))


# ---------------------------------------------------------------- tables -----

TABLE_COLUMNS = ("m", "value", "method", "est_error")


def write_table_csv(rows: Iterable[FourierCoefficient], fh, metadata: dict | None = None) -> None:
    """Write coefficients as CSV with ``#``-prefixed metadata lines."""
    for key, val in (metadata or {}).items():
        fh.write(f"# {key}: {val}\n")
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(TABLE_COLUMNS)
    for r in rows:
        w.writerow([r.m, repr(float(r.value)), r.method, repr(float(r.est_error))])


def table_to_json(rows: Iterable[FourierCoefficient]) -> str:
    return json.dumps([asdict(r) for r in rows])
