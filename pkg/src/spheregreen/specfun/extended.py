"""Carlson integrals and complete elliptic integrals in ``decimal`` arithmetic.

Used where a closed form is a heavily cancelling combination of O(1)
elliptic integrals (the S^3 Fourier coefficients at small B): evaluating
the same formula with more working digits restores full double accuracy
in the final result.
"""

from __future__ import annotations

from decimal import Context, Decimal, localcontext


def _stop_scale(r: Decimal, c: int) -> Decimal:
    # (c r)^(-1/6), evaluated through exp/ln.
    return ((c * r).ln() / -6).exp()


def rf(x: Decimal, y: Decimal, z: Decimal, r: Decimal) -> Decimal:
    """R_F(x, y, z) by duplication; the working context sets the precision."""
    a0 = (x + y + z) / 3
    q = _stop_scale(r, 3) * max(abs(a0 - x), abs(a0 - y), abs(a0 - z))
    a, scale = a0, Decimal(1)
    x0, y0 = x, y
    while scale * q >= abs(a):
        sx, sy, sz = x.sqrt(), y.sqrt(), z.sqrt()
        lam = sx * sy + sx * sz + sy * sz
        x, y, z = (x + lam) / 4, (y + lam) / 4, (z + lam) / 4
        a = (a + lam) / 4
        scale /= 4
    X = (a0 - x0) * scale / a
    Y = (a0 - y0) * scale / a
    Z = -(X + Y)
    e2 = X * Y - Z * Z
    e3 = X * Y * Z
    return (1 - e2 / 10 + e3 / 14 + e2 * e2 / 24 - 3 * e2 * e3 / 44) / a.sqrt()


def rj(x: Decimal, y: Decimal, z: Decimal, p: Decimal, r: Decimal) -> Decimal:
    """R_J(x, y, z, p) for p > 0; R_D is the case p = z."""
    a0 = (x + y + z + 2 * p) / 5
    delta = (p - x) * (p - y) * (p - z)
    q = _stop_scale(r / 4, 1) * max(abs(a0 - x), abs(a0 - y), abs(a0 - z), abs(a0 - p))
    a, scale, acc = a0, Decimal(1), Decimal(0)
    x0, y0, z0 = x, y, z
    while scale * q >= abs(a):
        sx, sy, sz, sp = x.sqrt(), y.sqrt(), z.sqrt(), p.sqrt()
        lam = sx * sy + sx * sz + sy * sz
        dn = (sp + sx) * (sp + sy) * (sp + sz)
        en = scale ** 3 * delta / (dn * dn)
        # R_C(1, 1 + e) = R_F(1, 1 + e, 1 + e)
        acc += scale / dn * rf(Decimal(1), 1 + en, 1 + en, r)
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
    return scale * poly / (a * a.sqrt()) + 6 * acc


def complete_kepi(k2: Decimal, alpha2: Decimal, digits: int) -> tuple[Decimal, Decimal, Decimal]:
    """K(k), E(k) and Pi(alpha2, k) for 0 <= alpha2 < 1, 0 <= k2 < 1.

    Must be called inside a ``decimal`` context whose precision exceeds
    ``digits``; ``digits`` sets the Carlson stopping tolerance.
    """
    r = Decimal(10) ** (-digits)
    kc2 = 1 - k2
    zero, one = Decimal(0), Decimal(1)
    K = rf(zero, kc2, one, r)
    E = K - k2 / 3 * rj(zero, kc2, one, one, r)
    Pi = K if alpha2 == 0 else K + alpha2 / 3 * rj(zero, kc2, one, 1 - alpha2, r)
    return K, E, Pi


def with_digits(digits: int):
    """Context manager with ``digits + 10`` significant digits."""
    ctx = Context(prec=digits + 10)
    return localcontext(ctx)
