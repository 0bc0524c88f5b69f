"""Exact scalar arithmetic: rationals and Gaussian rationals.

Every orbit computation in this package is done over Q or Q(i).  The
rational scalar is ``gmpy2.mpq`` (canonical form is maintained by
construction: positive denominator, gcd-reduced), re-exported as ``Rat``.
``GaussRational`` layers a complex unit on top of two ``Rat`` components.

Floating point never enters through this module; the only float use in the
package is explicitly flagged witness/representative materialization.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import gmpy2
from gmpy2 import mpq as Rat  # noqa: N812  (type-like alias)

RatLike = Union["Rat", int, str]

ZERO = Rat(0)
ONE = Rat(1)


def rat(value) -> Rat:
    """Coerce ints, "n/d" strings, or rationals to a canonical rational."""
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a string like '1/3'")
    return Rat(value)


def rat_str(value: Rat) -> str:
    """Serialize as "n/d", omitting the denominator when it is 1."""
    return str(value)


def sqrt_exact(value: Rat):
    """Exact square root of a nonnegative rational, or None if irrational."""
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    if not (gmpy2.is_square(num) and gmpy2.is_square(den)):
        return None
    return Rat(gmpy2.isqrt(num), gmpy2.isqrt(den))


def sum_of_two_squares(value: Rat):
    """Write a positive rational as a^2 + b^2 with a, b rational.

    Returns (a, b) with a >= 0, or None when no rational decomposition
    exists (some prime = 3 mod 4 appears to an odd power).  Used to build
    exact conjugating witnesses on elliptic orbits; callers fall back to
    floats when this returns None.
    """
    if value <= 0:
        return None
    num, den = value.numerator, value.denominator
    m = int(num * den)  # value = m / den^2
    # Gaussian-integer factorization of m: build z with |z|^2 = m.
    from sympy import factorint
    from sympy.solvers.diophantine.diophantine import cornacchia

    re, im = 1, 0
    for p, exp in factorint(m).items():
        if p == 2:
            for _ in range(exp):
                re, im = re - im, re + im  # multiply by (1 + i)
        elif p % 4 == 1:
            xp, yp = next(iter(cornacchia(1, 1, p)))
            for _ in range(exp):
                re, im = re * xp - im * yp, re * yp + im * xp
        else:
            if exp % 2:
                return None
            s = p ** (exp // 2)
            re, im = re * s, im * s
    a = abs(Rat(re, den))
    b = abs(Rat(im, den))
    assert a * a + b * b == value
    return a, b


@dataclass(frozen=True)
class GaussRational:
    """Element of Q(i), held as exact real and imaginary rational parts."""

    re: Rat
    im: Rat

    def __post_init__(self):
        object.__setattr__(self, "re", rat(self.re))
        object.__setattr__(self, "im", rat(self.im))

    @classmethod
    def of(cls, re: RatLike, im: RatLike = 0) -> "GaussRational":
        return cls(rat(re), rat(im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __add__(self, other) -> "GaussRational":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other) -> "GaussRational":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> "GaussRational":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self) -> "GaussRational":
        return GaussRational(-self.re, -self.im)

    def __mul__(self, other) -> "GaussRational":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "GaussRational":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        norm = other.re * other.re + other.im * other.im
        return GaussRational(
            (self.re * other.re + self.im * other.im) / norm,
            (self.im * other.re - self.re * other.im) / norm,
        )

    def __rtruediv__(self, other) -> "GaussRational":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int) -> "GaussRational":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return (GaussRational(ONE, ZERO) / self) ** (-exponent)
        result = GaussRational(ONE, ZERO)
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def norm(self) -> Rat:
        """Field norm re^2 + im^2 (a rational)."""
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return not self.im

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self) -> str:
        return f"GaussRational({self.re!s}, {self.im!s})"

    def to_json(self) -> dict:
        return {"re": rat_str(self.re), "im": rat_str(self.im)}

    @classmethod
    def from_json(cls, data) -> "GaussRational":
        if isinstance(data, dict):
            return cls.of(data.get("re", 0), data.get("im", 0))
        return cls.of(data)


GZERO = GaussRational.of(0)
GONE = GaussRational.of(1)
I_UNIT = GaussRational.of(0, 1)


def _coerce(value):
    if isinstance(value, GaussRational):
        return value
    if isinstance(value, (int, type(ZERO))):
        return GaussRational(rat(value), ZERO)
    return NotImplemented


def gauss(re: RatLike, im: RatLike = 0) -> GaussRational:
    """Shorthand constructor for Q(i) scalars."""
    return GaussRational.of(re, im)
