"""Chebyshev, Gegenbauer and associated Legendre (Ferrers, integer order) polynomials."""

from __future__ import annotations

import math

from ..errors import DomainError


def _check_unit(x: float, closed: bool = True) -> None:
    ok = -1.0 <= x <= 1.0 if closed else -1.0 < x < 1.0
    if not ok:
        interval = "[-1, 1]" if closed else "(-1, 1)"
        raise DomainError(f"argument x={x} outside {interval}")


def _check_degree(n: int, name: str = "degree") -> int:
    if int(n) != n or n < 0:
        raise DomainError(f"{name} must be a nonnegative integer, got {n}")
    return int(n)


def chebyshev_T(m: int, x: float) -> float:
    """Chebyshev polynomial T_m(x) by the three-term recurrence."""
    m = _check_degree(m, "order m")
    _check_unit(x)
    if m == 0:
        return 1.0
    t0, t1 = 1.0, x
    for _ in range(m - 1):
        t0, t1 = t1, 2.0 * x * t1 - t0
    return t1


def gegenbauer_C(l: int, mu: float, x: float) -> float:
    """Gegenbauer polynomial C_l^mu(x) for mu > -1/2, mu != 0.

    Uses (n + 1) C_{n+1} = 2 (n + mu) x C_n - (n + 2 mu - 1) C_{n-1}.
    """
    l = _check_degree(l)
    if mu <= -0.5 or mu == 0.0:
        raise DomainError(f"Gegenbauer parameter mu={mu} must satisfy mu > -1/2, mu != 0")
    _check_unit(x)
    if l == 0:
        return 1.0
    c0, c1 = 1.0, 2.0 * mu * x
    for n in range(1, l):
        c0, c1 = c1, (2.0 * (n + mu) * x * c1 - (n + 2.0 * mu - 1.0) * c0) / (n + 1)
    return c1


def legendre_P(l: int, x: float) -> float:
    """Legendre polynomial P_l(x) (Bonnet recurrence)."""
    l = _check_degree(l)
    if l == 0:
        return 1.0
    p0, p1 = 1.0, x
    for n in range(1, l):
        p0, p1 = p1, ((2 * n + 1) * x * p1 - n * p0) / (n + 1)
    return p1


def assoc_legendre_P(l: int, m: int, x: float) -> float:
    """Ferrers function P_l^m(x) of integer degree and order, |m| <= l.

    The convention includes the factor (-1)^m, so P_1^1(x) = -sqrt(1 - x^2).
    Negative orders use P_l^{-m} = (-1)^m (l - m)!/(l + m)! P_l^m.
    """
    l = _check_degree(l)
    if int(m) != m:
        raise DomainError(f"order m must be an integer, got {m}")
    m = int(m)
    if abs(m) > l:
        raise DomainError(f"order |m|={abs(m)} exceeds degree l={l}")
    _check_unit(x, closed=False)
    if m < 0:
        ratio = math.exp(math.lgamma(l + m + 1) - math.lgamma(l - m + 1))
        return (-1) ** m * ratio * assoc_legendre_P(l, -m, x)
    s = math.sqrt((1.0 - x) * (1.0 + x))
    # P_m^m = (-1)^m (2m - 1)!! s^m
    pmm = 1.0
    for i in range(1, m + 1):
        pmm *= -(2 * i - 1) * s
    if l == m:
        return pmm
    p0, p1 = pmm, (2 * m + 1) * x * pmm
    for n in range(m + 1, l):
        p0, p1 = p1, ((2 * n + 1) * x * p1 - (n + m) * p0) / (n - m + 1)
    return p1
