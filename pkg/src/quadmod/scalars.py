"""Exact Gaussian rationals, the coefficient field Q(i) used by every carrier."""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational


class GaussianRational:
    """An element ``re + im*i`` of Q(i) with exact rational parts.

    Instances are immutable and hashable.  Mixed arithmetic with ``int`` and
    ``Fraction`` is supported; floats are rejected so that nothing inexact
    leaks into the symbolic layer.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def coerce(cls, value) -> GaussianRational:
        if isinstance(value, GaussianRational):
            return value
        return cls(value)

    # arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        if not other.im and not self.im:
            return GaussianRational(self.re * other.re)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        d = other.abs2()
        if d == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return self * other.conjugate() * GaussianRational(1 / d)

    def __rtruediv__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return other / self

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        """``|z|^2``, always an exact nonnegative rational."""
        return self.re * self.re + self.im * self.im

    def modulus(self) -> Fraction | None:
        """``|z|`` if it is rational, else ``None``."""
        return rational_sqrt(self.abs2())

    def is_real(self) -> bool:
        return self.im == 0

    # comparisons / conversion -----------------------------------------

    def __eq__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return _imag_str(self.im)
        sign = "+" if self.im > 0 else "-"
        return f"({self.re} {sign} {_imag_str(abs(self.im))})"


def _imag_str(q: Fraction) -> str:
    if q == 1:
        return "i"
    if q == -1:
        return "-i"
    return f"{q}·i"


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"exact rational expected, got {type(value).__name__}")


def _coerce_or_none(value):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    return None


def rational_sqrt(q) -> Fraction | None:
    """Exact square root of a nonnegative rational, or ``None`` if irrational."""
    q = Fraction(q)
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def rational_sqrt_upper(q, denominator: int = 1 << 20) -> Fraction:
    """A rational ``r >= sqrt(q)``, exact whenever ``sqrt(q)`` is rational."""
    q = Fraction(q)
    exact = rational_sqrt(q)
    if exact is not None:
        return exact
    # ceil(sqrt(q * D^2)) / D is >= sqrt(q)
    scaled = q * denominator * denominator
    r = math.isqrt(scaled.numerator // scaled.denominator) + 1
    return Fraction(r, denominator)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
