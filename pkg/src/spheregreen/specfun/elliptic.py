"""Legendre elliptic integrals through Carlson's symmetric forms.

All four Legendre integrals share the duplication-theorem kernels
``carlson_rf``, ``carlson_rd`` and ``carlson_rj`` so that, for instance,
``elliptic_F(pi/2, k)`` and ``elliptic_K(k)`` follow the same code path.
"""

from __future__ import annotations

import math

from ..errors import DomainError, SingularityError

# Stopping rule of Carlson (1995): iterate until 4**-n * Q < |A_n| with
# Q = (3r)**(-1/6) max|A0 - x|; r near machine epsilon gives ~1e-15.
_R_TOL = 1e-15
K_GUARD = 1e-12


def carlson_rc(x: float, y: float) -> float:
    """Degenerate integral R_C(x, y) for x >= 0, y != 0 (Cauchy value if y < 0)."""
    if x < 0 or y == 0:
        raise DomainError(f"carlson_rc requires x >= 0 and y != 0, got x={x}, y={y}")
    if y < 0:
        # Cauchy principal value.
        return math.sqrt(x / (x - y)) * carlson_rc(x - y, -y)
    if x == y:
        return 1.0 / math.sqrt(x)
    if x < y:
        return math.acos(math.sqrt(x / y)) / math.sqrt(y - x)
    return math.acosh(math.sqrt(x / y)) / math.sqrt(x - y)


def _rc_one_plus(e: float) -> float:
    """R_C(1, 1 + e), with a series for small |e| to avoid cancellation."""
    if abs(e) < 1e-4:
        return 1.0 - e / 3.0 + e * e / 5.0 - e ** 3 / 7.0 + e ** 4 / 9.0
    if e > 0:
        s = math.sqrt(e)
        return math.atan(s) / s
    s = math.sqrt(-e)
    return math.atanh(s) / s


def carlson_rf(x: float, y: float, z: float) -> float:
    """Carlson's R_F(x, y, z); at most one argument may vanish."""
    if min(x, y, z) < 0 or (x == 0) + (y == 0) + (z == 0) > 1:
        raise DomainError(f"carlson_rf needs nonnegative args with at most one zero: {(x, y, z)}")
    a0 = (x + y + z) / 3.0
    q = (3.0 * _R_TOL) ** (-1.0 / 6.0) * max(abs(a0 - x), abs(a0 - y), abs(a0 - z))
    a, scale = a0, 1.0
    x0, y0 = x, y
    while scale * q >= abs(a):
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
        lam = sx * sy + sx * sz + sy * sz
        x, y, z = (x + lam) / 4, (y + lam) / 4, (z + lam) / 4
        a = (a + lam) / 4
        scale /= 4
    X = (a0 - x0) * scale / a
    Y = (a0 - y0) * scale / a
    Z = -(X + Y)
    e2 = X * Y - Z * Z
    e3 = X * Y * Z
    return (1 - e2 / 10 + e3 / 14 + e2 * e2 / 24 - 3 * e2 * e3 / 44) / math.sqrt(a)


def carlson_rd(x: float, y: float, z: float) -> float:
    """Carlson's R_D(x, y, z) = R_J(x, y, z, z); needs z > 0 and x + y > 0."""
    if min(x, y) < 0 or z <= 0 or x + y == 0:
        raise DomainError(f"carlson_rd domain violated: {(x, y, z)}")
    a0 = (x + y + 3 * z) / 5.0
    q = (_R_TOL / 4.0) ** (-1.0 / 6.0) * max(abs(a0 - x), abs(a0 - y), abs(a0 - z))
    a, scale, acc = a0, 1.0, 0.0
    x0, y0 = x, y
    while scale * q >= abs(a):
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
        lam = sx * sy + sx * sz + sy * sz
        acc += scale / (sz * (z + lam))
        x, y, z = (x + lam) / 4, (y + lam) / 4, (z + lam) / 4
        a = (a + lam) / 4
        scale /= 4
    X = (a0 - x0) * scale / a
    Y = (a0 - y0) * scale / a
    Z = -(X + Y) / 3
    e2 = X * Y - 6 * Z * Z
    e3 = (3 * X * Y - 8 * Z * Z) * Z
    e4 = 3 * (X * Y - Z * Z) * Z * Z
    e5 = X * Y * Z ** 3
    poly = (1 - 3 * e2 / 14 + e3 / 6 + 9 * e2 * e2 / 88 - 3 * e4 / 22
            - 9 * e2 * e3 / 52 + 3 * e5 / 26)
    return scale * a ** -1.5 * poly + 3 * acc


def _rj_positive(x: float, y: float, z: float, p: float) -> float:
    a0 = (x + y + z + 2 * p) / 5.0
    delta = (p - x) * (p - y) * (p - z)
    q = (_R_TOL / 4.0) ** (-1.0 / 6.0) * max(abs(a0 - x), abs(a0 - y), abs(a0 - z), abs(a0 - p))
    a, scale, acc = a0, 1.0, 0.0
    x0, y0, z0 = x, y, z
    while scale * q >= abs(a):
        sx, sy, sz, sp = math.sqrt(x), math.sqrt(y), math.sqrt(z), math.sqrt(p)
        lam = sx * sy + sx * sz + sy * sz
        dn = (sp + sx) * (sp + sy) * (sp + sz)
        en = scale ** 3 * delta / (dn * dn)
        acc += scale / dn * _rc_one_plus(en)
        x, y, z, p = (x + lam) / 4, (y + lam) / 4, (z + lam) / 4, (p + lam) / 4
        a = (a + lam) / 4
        scale /= 4
    X = (a0 - x0) * scale / a
    Y = (a0 - y0) * scale / a
    Z = (a0 - z0) * scale / a
    P = -(X + Y + Z) / 2
    e2 = X * Y + X * Z + Y * Z - 3 * P * P
    e3 = X * Y * Z + 2 * e2 * P + 4 * P ** 3
    e4 = (2 * X * Y * Z + e2 * P + 3 * P ** 3) * P
    e5 = X * Y * Z * P * P
    poly = (1 - 3 * e2 / 14 + e3 / 6 + 9 * e2 * e2 / 88 - 3 * e4 / 22
            - 9 * e2 * e3 / 52 + 3 * e5 / 26)
    return scale * a ** -1.5 * poly + 6 * acc


def carlson_rj(x: float, y: float, z: float, p: float) -> float:
    """Carlson's R_J(x, y, z, p).

    For ``p < 0`` the Cauchy principal value is returned, reduced to a
    positive-``p`` integral plus R_F and R_C terms.
    """
    if min(x, y, z) < 0 or (x == 0) + (y == 0) + (z == 0) > 1 or p == 0:
        raise DomainError(f"carlson_rj domain violated: {(x, y, z, p)}")
    if p > 0:
        return _rj_positive(x, y, z, p)
    x, y, z = sorted((x, y, z))
    return _rj_negative(x, y, z, -p)


def _rj_negative(x: float, y: float, z: float, q: float) -> float:
    # DLMF 19.20.14 rearranged: with x <= y <= z and p = -q < 0,
    # (y + q) R_J(x,y,z,-q) = (p' - y) R_J(x,y,z,p') - 3 R_F(x,y,z)
    #                          + 3 sqrt(x y z / (x z + p' q)) R_C(x z + p' q, p' q),
    # where p' = y + (z - y)(y - x)/(y + q).
    pp = y + (z - y) * (y - x) / (y + q)
    val = (pp - y) * _rj_positive(x, y, z, pp) - 3 * carlson_rf(x, y, z)
    if x * y * z > 0:
        val += 3 * math.sqrt(x * y * z / (x * z + pp * q)) * carlson_rc(x * z + pp * q, pp * q)
    return val / (y + q)


def _check_modulus(k: float, allow_one: bool = False) -> float:
    if not math.isfinite(k) or k < 0:
        raise DomainError(f"elliptic modulus must be finite and >= 0, got k={k}")
    if k > 1:
        raise DomainError(f"elliptic modulus must be <= 1, got k={k}")
    kc2 = (1.0 - k) * (1.0 + k)
    if not allow_one and kc2 < K_GUARD:
        raise SingularityError(
            f"modulus k={k!r} within the coincidence guard band (1 - k^2 = {kc2:.3g} < {K_GUARD:g})")
    return kc2


def elliptic_K(k: float) -> float:
    """Complete elliptic integral of the first kind K(k), modulus convention.

    Raises
    ------
    SingularityError
        If ``1 - k**2`` falls below the guard band (logarithmic blow-up).
    """
    return elliptic_F(math.pi / 2, k)


def elliptic_F(phi: float, k: float) -> float:
    """Incomplete elliptic integral of the first kind F(phi, k), 0 <= phi <= pi/2."""
    if not 0.0 <= phi <= math.pi / 2:
        raise DomainError(f"amplitude phi must lie in [0, pi/2], got {phi}")
    _check_modulus(k)
    if phi == 0.0:
        return 0.0
    s = math.sin(phi)
    # cos(pi/2) is not exactly zero in floating point.
    c2 = 0.0 if phi == math.pi / 2 else math.cos(phi) ** 2
    return s * carlson_rf(c2, (1.0 - k * s) * (1.0 + k * s), 1.0)


def elliptic_E(k: float) -> float:
    """Complete elliptic integral of the second kind E(k), 0 <= k <= 1."""
    kc2 = _check_modulus(k, allow_one=True)
    if kc2 == 0.0:
        return 1.0
    k2 = k * k
    return carlson_rf(0.0, kc2, 1.0) - k2 / 3.0 * carlson_rd(0.0, kc2, 1.0)


def elliptic_Pi(alpha2: float, k: float) -> float:
    """Complete elliptic integral of the third kind.

    Pi(alpha2, k) = int_0^{pi/2} dt / ((1 - alpha2 sin^2 t) sqrt(1 - k^2 sin^2 t)).
    For ``alpha2 > 1`` the Cauchy principal value is returned.
    """
    if not math.isfinite(alpha2) or alpha2 < 0:
        raise DomainError(f"characteristic alpha2 must be finite and >= 0, got {alpha2}")
    if alpha2 == 1.0:
        raise DomainError("characteristic alpha2 = 1 makes Pi divergent")
    kc2 = _check_modulus(k)
    rf = carlson_rf(0.0, kc2, 1.0)
    if alpha2 == 0.0:
        return rf
    return rf + alpha2 / 3.0 * carlson_rj(0.0, kc2, 1.0, 1.0 - alpha2)
