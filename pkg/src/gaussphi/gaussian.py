"""Exact Gaussian-integer arithmetic.

Coordinates are plain Python ints, so nothing can wrap; values of any size
are exact.
"""

from __future__ import annotations

from typing import NamedTuple


class NotDivisible(ArithmeticError):
    """Raised by :func:`div_exact` when the divisor does not divide."""


class GaussInt(NamedTuple):
    re: int
    im: int

    def __add__(self, other):
        other = as_gauss(other)
        return GaussInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = as_gauss(other)
        return GaussInt(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return as_gauss(other) - self

    def __neg__(self):
        return GaussInt(-self.re, -self.im)

    def __mul__(self, other):
        return mul(self, as_gauss(other))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result, base = ONE, self
        while k:
            if k & 1:
                result = mul(result, base)
            base = mul(base, base)
            k >>= 1
        return result

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __str__(self):
        a, b = self.re, self.im
        if b == 0:
            return str(a)
        if b == 1:
            im = "i"
        elif b == -1:
            im = "-i"
        else:
            im = f"{b}i"
        if a == 0:
            return im
        return f"{a}{im}" if im.startswith("-") else f"{a}+{im}"


def as_gauss(x) -> GaussInt:
    if isinstance(x, GaussInt):
        return x
    if isinstance(x, int):
        return GaussInt(x, 0)
    if isinstance(x, tuple) and len(x) == 2:
        return GaussInt(int(x[0]), int(x[1]))
    if isinstance(x, complex):
        raise TypeError("floating-point complex values are not accepted")
    raise TypeError(f"cannot interpret {x!r} as a Gaussian integer")


ZERO = GaussInt(0, 0)
ONE = GaussInt(1, 0)
I = GaussInt(0, 1)
ONE_PLUS_I = GaussInt(1, 1)
UNITS = (GaussInt(1, 0), GaussInt(-1, 0), GaussInt(0, 1), GaussInt(0, -1))


def norm(x: GaussInt) -> int:
    return x.re * x.re + x.im * x.im


def conj(x: GaussInt) -> GaussInt:
    return GaussInt(x.re, -x.im)


def mul(x: GaussInt, y: GaussInt) -> GaussInt:
    a, b = x
    c, d = y
    return GaussInt(a * c - b * d, a * d + b * c)


def div_exact(x: GaussInt, d: GaussInt) -> GaussInt:
    """Return ``q`` with ``x == q * d``.

    Raises :class:`NotDivisible` if ``d`` does not divide ``x`` and
    :class:`ZeroDivisionError` if ``d`` is zero.
    """
    n = norm(d)
    if n == 0:
        raise ZeroDivisionError("division by the zero Gaussian integer")
    p = mul(x, conj(d))
    if p.re % n or p.im % n:
        raise NotDivisible(f"{d} does not divide {x}")
    return GaussInt(p.re // n, p.im // n)


def divides(d: GaussInt, x: GaussInt) -> bool:
    try:
        div_exact(x, d)
    except NotDivisible:
        return False
    return True


def two_adic_val(x: GaussInt) -> int:
    """Largest ``j`` with ``2**j`` dividing both coordinates of ``x``."""
    # Trailing zeros of a|b are the smaller of the two coordinates' counts.
    v = x[0] | x[1]
    if v == 0:
        raise ValueError("2-adic valuation of 0 is undefined")
    return (v & -v).bit_length() - 1


def onepi_adic_val(x: GaussInt) -> int:
    """Largest ``k`` with ``(1+i)**k`` dividing ``x``."""
    j = two_adic_val(x)
    a, b = x.re >> j, x.im >> j
    # (1+i) | a+bi iff a+b is even; at most one more factor once 2 is stripped.
    return 2 * j + (1 if (a + b) % 2 == 0 else 0)


def canonical_octant(x: GaussInt) -> GaussInt:
    a, b = abs(x.re), abs(x.im)
    if a < b:
        a, b = b, a
    return GaussInt(a, b)


def orbit(x: GaussInt) -> set[GaussInt]:
    """The (at most eight) images of ``x`` under units and conjugation."""
    a, b = x
    return {
        GaussInt(a, b), GaussInt(-a, b), GaussInt(a, -b), GaussInt(-a, -b),
        GaussInt(b, a), GaussInt(-b, a), GaussInt(b, -a), GaussInt(-b, -a),
    }
