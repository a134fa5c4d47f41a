"""Exact Gaussian rationals, (a + b i) / d with integer a, b and d > 0."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational


class GaussianRational:
    """An element of Q(i) kept in lowest terms.

    Stored as a common-denominator triple so that arithmetic stays in
    machine-friendly integer operations; ``real`` and ``imag`` expose the
    parts as :class:`fractions.Fraction`.
    """

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, real=0, imag=0):
        real = Fraction(real)
        imag = Fraction(imag)
        d = real.denominator * imag.denominator // gcd(real.denominator, imag.denominator)
        self._a = real.numerator * (d // real.denominator)
        self._b = imag.numerator * (d // imag.denominator)
        self._d = d

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> "GaussianRational":
        if d < 0:
            a, b, d = -a, -b, -d
        g = gcd(gcd(a, b), d)
        if g != 1:
            a //= g
            b //= g
            d //= g
        obj = object.__new__(cls)
        obj._a = a
        obj._b = b
        obj._d = d
        return obj

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, int):
            return cls._raw(value, 0, 1)
        if isinstance(value, Rational):
            return cls._raw(value.numerator, 0, value.denominator)
        if isinstance(value, complex):
            re, im = value.real, value.imag
            if re != int(re) or im != int(im):
                raise TypeError(f"complex value {value!r} is not a Gaussian integer")
            return cls._raw(int(re), int(im), 1)
        raise TypeError(f"cannot convert {type(value).__name__} to GaussianRational")

    @property
    def real(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def imag(self) -> Fraction:
        return Fraction(self._b, self._d)

    def is_real(self) -> bool:
        return self._b == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self._a, -self._b, self._d)

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __neg__(self) -> "GaussianRational":
        obj = object.__new__(GaussianRational)
        obj._a = -self._a
        obj._b = -self._b
        obj._d = self._d
        return obj

    def __pos__(self):
        return self

    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        if self._d == other._d:
            return GaussianRational._raw(self._a + other._a, self._b + other._b, self._d)
        d1, d2 = self._d, other._d
        return GaussianRational._raw(
            self._a * d2 + other._a * d1, self._b * d2 + other._b * d1, d1 * d2
        )

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return GaussianRational._raw(self._a * other, self._b * other, self._d)
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        a1, b1, a2, b2 = self._a, self._b, other._a, other._b
        if b1 == 0 and b2 == 0:
            return GaussianRational._raw(a1 * a2, 0, self._d * other._d)
        return GaussianRational._raw(a1 * a2 - b1 * b2, a1 * b2 + b1 * a2, self._d * other._d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        if not other:
            raise ZeroDivisionError("division by zero Gaussian rational")
        # (a1 + b1 i)/d1 / ((a2 + b2 i)/d2) = d2 (a1 + b1 i)(a2 - b2 i) / (d1 (a2^2 + b2^2))
        a1, b1, a2, b2 = self._a, self._b, other._a, other._b
        norm = a2 * a2 + b2 * b2
        return GaussianRational._raw(
            other._d * (a1 * a2 + b1 * b2), other._d * (b1 * a2 - a1 * b2), self._d * norm
        )

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self._a == other._a and self._b == other._b and self._d == other._d
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self == other

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __complex__(self) -> complex:
        return complex(self._a / self._d, self._b / self._d)

    def __repr__(self) -> str:
        return f"GaussianRational({self})"

    def __str__(self) -> str:
        re, im = self.real, self.imag
        if im == 0:
            return str(re)
        im_txt = "" if abs(im) == 1 else str(abs(im))
        if re == 0:
            return ("-" if im < 0 else "") + im_txt + "i"
        return f"{re}{'-' if im < 0 else '+'}{im_txt}i"


ZERO = GaussianRational()
ONE = GaussianRational(1)
HALF = GaussianRational(Fraction(1, 2))
I = GaussianRational(0, 1)


def as_scalar(value) -> GaussianRational:
    return GaussianRational.coerce(value)


def fraction_text(q: Fraction) -> str:
    """Render a rational as the reduced ``num/den`` string used on the wire."""
    return f"{q.numerator}/{q.denominator}"


def parse_fraction_text(text: str) -> Fraction:
    return Fraction(text)
