"""Pochhammer symbols and the real Gauss hypergeometric function 2F1."""

from __future__ import annotations

import math

from scipy.special import digamma

from ..config import DEFAULT_CONFIG, ExpansionConfig
from ..errors import ConvergenceError, DomainError


def _is_nonpos_int(x: float) -> bool:
    return x <= 0 and x == math.floor(x)


def pochhammer(a: float, n: int) -> float:
    """Rising factorial (a)_n as a direct product; (a)_0 = 1 for every a."""
    if n < 0 or int(n) != n:
        raise DomainError(f"pochhammer needs an integer n >= 0, got {n}")
    out = 1.0
    for i in range(int(n)):
        out *= a + i
    return out


def rgamma(x: float) -> float:
    """Reciprocal Gamma function, zero at the poles of Gamma."""
    if _is_nonpos_int(x):
        return 0.0
    try:
        return 1.0 / math.gamma(x)
    except OverflowError:
        return 0.0


def _series(a, b, c, z, cfg, start_term=1.0):
    """Plain Maclaurin sum; terminates exactly if a or b is a nonpositive integer."""
    term, total = start_term, start_term
    small = 0
    for s in range(cfg.max_terms):
        num = (a + s) * (b + s)
        if num == 0.0:
            return total
        term *= num / ((c + s) * (s + 1)) * z
        total += term
        if abs(term) <= cfg.term_rtol * abs(total):
            small += 1
            if small >= 2:
                return total
        else:
            small = 0
    raise ConvergenceError(
        f"2F1({a}, {b}; {c}; {z}) did not converge in {cfg.max_terms} terms")


def _terminating_length(a: float, b: float):
    n = [int(-v) for v in (a, b) if _is_nonpos_int(v)]
    return min(n) if n else None


def gauss_2F1(a: float, b: float, c: float, z: float,
              config: ExpansionConfig | None = None) -> float:
    """Gauss hypergeometric function 2F1(a, b; c; z) for real arguments.

    Terminating series (``a`` or ``b`` a nonpositive integer) are summed
    exactly for any ``z``. Otherwise ``|z| < 1`` is required; arguments with
    ``z > 3/4`` go through the ``1 - z`` connection formulas (including the
    logarithmic cases where ``c - a - b`` is an integer) and ``z < -1/2``
    through Pfaff's transformation. ``z = 1`` uses Gauss's sum when it
    converges.

    Raises
    ------
    DomainError
        If ``c`` is a nonpositive integer and the series does not stop first.
    ConvergenceError
        If the series diverges at ``z`` or the term cap is reached.
    """
    cfg = config or DEFAULT_CONFIG
    n_term = _terminating_length(a, b)
    if _is_nonpos_int(c) and (n_term is None or n_term > -c):
        raise DomainError(f"2F1 undefined: c={c} is a pole and the series does not terminate first")
    if z == 0.0:
        return 1.0
    if n_term is not None:
        return _series(a, b, c, z, cfg)
    if z == 1.0:
        if c - a - b > 0:
            return math.gamma(c) * math.gamma(c - a - b) * rgamma(c - a) * rgamma(c - b)
        raise ConvergenceError(f"2F1({a}, {b}; {c}; 1) diverges (c - a - b <= 0)")
    if abs(z) >= 1.0:
        raise ConvergenceError(f"2F1 series diverges at |z| = {abs(z)} >= 1")
    if z < -0.5:
        return (1.0 - z) ** (-a) * gauss_2F1(a, c - b, c, z / (z - 1.0), cfg)
    if z <= 0.75:
        return _series(a, b, c, z, cfg)
    return _one_minus_z(a, b, c, z, cfg)


def _one_minus_z(a, b, c, z, cfg):
    w = 1.0 - z
    s = c - a - b
    m = round(s)
    if abs(s - m) > 1e-12:
        t1 = math.gamma(c) * math.gamma(s) * rgamma(c - a) * rgamma(c - b)
        t2 = math.gamma(c) * math.gamma(-s) * rgamma(a) * rgamma(b)
        out = 0.0
        if t1 != 0.0:
            out += t1 * _series(a, b, 1.0 - s, w, cfg)
        if t2 != 0.0:
            out += t2 * w ** s * _series(c - a, c - b, 1.0 + s, w, cfg)
        return out
    if m >= 0:
        return _log_case(a, b, m, w, cfg)
    # c = a + b - m': swap roles through Euler's transformation
    # F(a,b;c;z) = (1-z)^(c-a-b) F(c-a, c-b; c; z), whose excess is m' > 0.
    return w ** s * _log_case(c - a, c - b, -m, w, cfg)


def _log_case(a, b, m, w, cfg):
    """2F1(a, b; a + b + m; 1 - w) for integer m >= 0 and small w."""
    c = a + b + m
    lw = math.log(w)
    # Finite part.
    finite = 0.0
    if m > 0:
        term = 1.0
        for n in range(m):
            if n > 0:
                term *= (a + n - 1) * (b + n - 1) / (n * (n - m)) * w
            finite += term
        finite *= math.gamma(m) * math.gamma(c) * rgamma(a + m) * rgamma(b + m)
    pref = (-w) ** m * math.gamma(c) * rgamma(a) * rgamma(b) / math.factorial(m)
    if pref == 0.0:
        return finite
    total, term, small = 0.0, 1.0, 0
    for n in range(cfg.max_terms):
        if n > 0:
            term *= (a + m + n - 1) * (b + m + n - 1) / (n * (n + m)) * w
        bracket = (lw - digamma(n + 1) - digamma(n + m + 1)
                   + digamma(a + n + m) + digamma(b + n + m))
        piece = term * bracket
        total += piece
        if abs(piece) <= cfg.term_rtol * abs(total) or term == 0.0:
            small += 1
            if small >= 2:
                return finite - pref * total
        else:
            small = 0
    raise ConvergenceError("logarithmic 2F1 continuation did not converge")


def hyp2f1_regularized(a: float, b: float, c: float, z: float,
                       config: ExpansionConfig | None = None) -> float:
    """2F1(a, b; c; z) / Gamma(c), finite also when c is a nonpositive integer."""
    if _is_nonpos_int(c):
        n = int(-c)
        n_term = _terminating_length(a, b)
        if n_term is not None and n_term <= n:
            return 0.0
        lead = pochhammer(a, n + 1) * pochhammer(b, n + 1) * z ** (n + 1) / math.factorial(n + 1)
        if lead == 0.0:
            return 0.0
        return lead * gauss_2F1(a + n + 1, b + n + 1, n + 2, z, config)
    return gauss_2F1(a, b, c, z, config) * rgamma(c)
