"""Ferrers functions P_nu^mu(x) and Q_nu^mu(x) on the cut -1 < x < 1.

The convention is the one with the (-1)^m factor built in, so that for
integer degree and order ``ferrers_P((l, m), x)`` agrees with
``assoc_legendre_P(l, m, x)``.

Evaluation strategy
-------------------
* ``mu = -nu``: the elementary closed form for P, and the terminating or
  logarithmic 2F1 form for Q.
* ``mu > 0`` with ``nu + mu`` an integer: the parity
  P(-x) = (-1)^(nu+mu) P(x), low-order seeds at |x| and the forward
  recurrence in the order, which is stable for x >= 0.
* other orders: the hypergeometric representation
  ((1+x)/(1-x))^(mu/2) * F(nu+1, -nu; 1-mu; (1-x)/2) with F regularized.
* Q at integer degree and order: the exact representation
  (-1)^m (1-x^2)^(m/2) d^m/dx^m [P_n(x) atanh(x) - W_{n-1}(x)].
* Q at non-integer order: the connection formula with P^mu and P^-mu.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from numpy.polynomial import legendre as npleg
from numpy.polynomial import polynomial as nppoly

from ..config import ExpansionConfig
from ..errors import DomainError, RepresentationError
from .hypergeometric import gauss_2F1, hyp2f1_regularized, rgamma
from .polynomials import assoc_legendre_P

_INT_TOL = 1e-12


class FerrersIndex(NamedTuple):
    """Degree ``nu`` and order ``mu`` of a Ferrers function."""

    nu: float
    mu: float


def _is_int(v: float) -> bool:
    return abs(v - round(v)) < _INT_TOL


def _check_x(x: float) -> None:
    if not (math.isfinite(x) and -1.0 < x < 1.0):
        raise DomainError(f"Ferrers functions are evaluated on the open interval (-1, 1), got x={x}")


def _index(idx) -> tuple[float, float]:
    nu, mu = idx
    nu, mu = float(nu), float(mu)
    if not (math.isfinite(nu) and math.isfinite(mu)):
        raise DomainError(f"non-finite Ferrers index {idx!r}")
    return nu, mu


def _p_series(nu, mu, x, config):
    return ((1.0 + x) / (1.0 - x)) ** (mu / 2.0) * hyp2f1_regularized(
        nu + 1.0, -nu, 1.0 - mu, (1.0 - x) / 2.0, config)


def _p_positive_parity(nu, mu, x, config):
    """P_nu^mu(x) for mu > 0, nu + mu integer, x >= 0."""
    mu0 = mu - math.floor(mu + _INT_TOL)
    if abs(mu0) < _INT_TOL:
        mu0 = 0.0
    theta = math.acos(x)
    s = math.sin(theta)
    if abs(mu0 - 0.5) < _INT_TOL:
        # Elementary half-integer orders.
        amp = math.sqrt(2.0 / (math.pi * s))
        lo = amp * math.sin((nu + 0.5) * theta) / (nu + 0.5)   # order -1/2
        hi = amp * math.cos((nu + 0.5) * theta)                # order +1/2
        m = 0.5
    else:
        lo = _p_series(nu, mu0, x, config)
        hi = _p_series(nu, mu0 + 1.0, x, config)
        m = mu0 + 1.0
        if mu < m - 0.5:
            return lo
    cot = x / s
    while m < mu - 0.5:
        lo, hi = hi, -2.0 * m * cot * hi - (nu - m + 1.0) * (nu + m) * lo
        m += 1.0
    return hi


def ferrers_P(idx, x: float, config: ExpansionConfig | None = None) -> float:
    """Ferrers function of the first kind P_nu^mu(x).

    Parameters
    ----------
    idx : FerrersIndex or (nu, mu)
        Degree and order.
    x : float
        Argument in the open interval (-1, 1).

    Returns
    -------
    float
        The function value, accurate to about 1e-13 relative for the
        degree/order families used by the hypersphere expansions.
    """
    nu, mu = _index(idx)
    _check_x(x)
    if nu < -0.5:
        nu = -nu - 1.0          # P_{-nu-1} = P_nu
    if _is_int(nu) and _is_int(mu) and mu > nu + 0.5:
        return 0.0
    if _is_int(nu) and _is_int(mu) and 0 <= mu:
        return assoc_legendre_P(round(nu), round(mu), x)
    if abs(mu + nu) < _INT_TOL:
        return ((1.0 - x) * (1.0 + x)) ** (nu / 2.0) / (2.0 ** nu * math.gamma(nu + 1.0))
    if mu > 0 and _is_int(nu + mu):
        val = _p_positive_parity(nu, mu, abs(x), config)
        if x < 0 and round(nu + mu) % 2:
            val = -val
        return val
    return _p_series(nu, mu, x, config)


def _legendre_coeffs(n: int):
    return npleg.leg2poly([0.0] * n + [1.0])


def _q_integer(n: int, m: int, x: float) -> float:
    """Q_n^m(x) for integers n, m >= 0 from the atanh representation."""
    pn = _legendre_coeffs(n)
    total = 0.0
    # Leibniz rule: only derivatives of P_n up to order n survive.
    for j in range(0, min(m, n) + 1):
        k = m - j
        pj = nppoly.polyval(x, nppoly.polyder(pn, j) if j else pn)
        if k == 0:
            dk = math.atanh(x)
        else:
            dk = math.factorial(k - 1) / 2.0 * ((1.0 - x) ** (-k) + (-1) ** (k - 1) * (1.0 + x) ** (-k))
        total += math.comb(m, j) * pj * dk
    if m < n:
        w = [0.0]
        for k in range(1, n + 1):
            w = nppoly.polyadd(w, nppoly.polymul(_legendre_coeffs(k - 1), _legendre_coeffs(n - k)) / k)
        total -= nppoly.polyval(x, nppoly.polyder(w, m) if m else w)
    return (-1) ** m * ((1.0 - x) * (1.0 + x)) ** (m / 2.0) * total


def ferrers_Q_diagonal(nu: float, x: float, config: ExpansionConfig | None = None) -> float:
    """Q_nu^{-nu}(x) from its Gauss hypergeometric representation.

    Q_nu^{-nu}(x) = sqrt(pi) x (1-x^2)^{nu/2} / (2^nu Gamma(nu + 1/2))
                    * 2F1(1/2, nu + 1; 3/2; x^2).

    Raises
    ------
    RepresentationError
        For nu in {-1/2, -3/2, ...}, where Gamma(nu + 1/2) has a pole.
    """
    _check_x(x)
    if nu + 0.5 <= 0 and _is_int(nu + 0.5):
        raise RepresentationError(f"Q_nu^-nu formula has a pole at nu={nu} (Gamma(nu + 1/2))")
    if x == 0.0:
        return 0.0
    pref = math.sqrt(math.pi) * x * ((1.0 - x) * (1.0 + x)) ** (nu / 2.0) / (2.0 ** nu * math.gamma(nu + 0.5))
    return pref * gauss_2F1(0.5, nu + 1.0, 1.5, x * x, config)


def ferrers_Q(idx, x: float, config: ExpansionConfig | None = None,
              fast_path: bool = True) -> float:
    """Ferrers function of the second kind Q_nu^mu(x).

    Parameters
    ----------
    idx : FerrersIndex or (nu, mu)
        Degree and order.
    x : float
        Argument in (-1, 1).
    fast_path : bool
        Use the diagonal 2F1 formula when ``mu == -nu``. Disable to force
        the general route (used to cross-check the two).

    Raises
    ------
    RepresentationError
        If no implemented representation covers (nu, mu): integer order with
        non-integer degree, or a Gamma pole in the connection formula.
    """
    nu, mu = _index(idx)
    _check_x(x)
    if fast_path and abs(mu + nu) < _INT_TOL:
        return ferrers_Q_diagonal(nu, x, config)
    if _is_int(mu):
        m = round(mu)
        if not (_is_int(nu) and nu > -0.5):
            raise RepresentationError(
                f"Q_nu^mu with integer order mu={m} needs a nonnegative integer degree, got nu={nu}")
        n = round(nu)
        if m >= 0:
            return _q_integer(n, m, x)
        if -m > n:
            raise RepresentationError(f"Q_{n}^{m} involves Gamma({n + m + 1}) at a pole")
        ratio = math.exp(math.lgamma(n + m + 1) - math.lgamma(n - m + 1))
        return (-1) ** m * ratio * _q_integer(n, -m, x)
    inv = rgamma(nu - mu + 1.0)
    if _is_int(nu + mu + 1.0) and nu + mu + 1.0 <= 0:
        raise RepresentationError(f"connection formula has a Gamma pole at nu + mu + 1 = {nu + mu + 1}")
    ratio = math.gamma(nu + mu + 1.0) * inv
    p_plus = ferrers_P((nu, mu), x, config)
    p_minus = ferrers_P((nu, -mu), x, config) if ratio != 0.0 else 0.0
    if _is_int(mu - 0.5):
        # exact trigonometric values at half-integer order
        cos_mu, sin_mu = 0.0, (-1.0) ** round(mu - 0.5)
    else:
        cos_mu, sin_mu = math.cos(mu * math.pi), math.sin(mu * math.pi)
    return math.pi / (2.0 * sin_mu) * (cos_mu * p_plus - ratio * p_minus)
