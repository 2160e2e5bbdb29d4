"""
Scalar Arithmetic
Exact Gaussian rationals and checked complex floats, the coefficient fields of every polynomial
"""

import math
from fractions import Fraction
from numbers import Integral, Rational as _RationalABC
from typing import Union

from .errors import InputError, MagnitudeError

Rational = Fraction
ComplexFloat = complex


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (Integral, _RationalABC)) and not isinstance(value, bool):
        return Fraction(int(value.numerator), int(value.denominator))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"Not a rational literal: {value!r}") from exc
    raise InputError(f"Exact arithmetic rejects {type(value).__name__} value {value!r}")


class GaussRational:
    """
    Element re + im*i of Q(i).

    Components are kept as canonical Fractions, so equality is structural.
    Instances are immutable and hashable. Arithmetic accepts ints and Fractions
    on either side but never floats or complex values.
    """

    __slots__ = ("_re", "_im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "_re", _as_fraction(re))
        object.__setattr__(self, "_im", _as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRational is immutable")

    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def im(self) -> Fraction:
        return self._im

    # complex-compatible aliases so generic code can read either kind
    @property
    def real(self) -> Fraction:
        return self._re

    @property
    def imag(self) -> Fraction:
        return self._im

    @classmethod
    def coerce(cls, value) -> "GaussRational":
        if isinstance(value, GaussRational):
            return value
        return cls(_as_fraction(value), 0)

    @classmethod
    def parse(cls, text: str) -> "GaussRational":
        """Parse a real rational literal such as "3", "-7/4" or "0.25"."""
        return cls(_as_fraction(text), 0)

    def conjugate(self) -> "GaussRational":
        return GaussRational(self._re, -self._im)

    def abs2(self) -> Fraction:
        return self._re * self._re + self._im * self._im

    def is_real(self) -> bool:
        return self._im == 0

    def __add__(self, other):
        try:
            other = GaussRational.coerce(other)
        except InputError:
            return NotImplemented
        return GaussRational(self._re + other._re, self._im + other._im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = GaussRational.coerce(other)
        except InputError:
            return NotImplemented
        return GaussRational(self._re - other._re, self._im - other._im)

    def __rsub__(self, other):
        try:
            other = GaussRational.coerce(other)
        except InputError:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        try:
            other = GaussRational.coerce(other)
        except InputError:
            return NotImplemented
        a, b, c, d = self._re, self._im, other._re, other._im
        return GaussRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "GaussRational":
        norm = self.abs2()
        if norm == 0:
            raise ZeroDivisionError("GaussRational division by zero")
        return GaussRational(self._re / norm, -self._im / norm)

    def __truediv__(self, other):
        try:
            other = GaussRational.coerce(other)
        except InputError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        try:
            other = GaussRational.coerce(other)
        except InputError:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self) -> "GaussRational":
        return GaussRational(-self._re, -self._im)

    def __pos__(self) -> "GaussRational":
        return self

    def __pow__(self, exponent: int) -> "GaussRational":
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = GaussRational(1)
        e = abs(exponent)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __bool__(self) -> bool:
        return bool(self._re) or bool(self._im)

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussRational):
            return self._re == other._re and self._im == other._im
        if isinstance(other, (Integral, _RationalABC)) and not isinstance(other, bool):
            return self._im == 0 and self._re == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __repr__(self) -> str:
        return f"GaussRational({str(self._re)!r}, {str(self._im)!r})"

    def __str__(self) -> str:
        if self._im == 0:
            return str(self._re)
        sign = "-" if self._im < 0 else "+"
        return f"{self._re}{sign}{abs(self._im)}i"

    def to_json(self) -> dict:
        return {"re": str(self._re), "im": str(self._im)}


Scalar = Union[GaussRational, complex]


def gauss_mul(a: GaussRational, b: GaussRational) -> GaussRational:
    """Exact product of two Gaussian rationals"""
    return a * b


def check_finite(z: complex) -> complex:
    """Return z as a complex, raising MagnitudeError on inf or nan components"""
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise MagnitudeError(f"Non-finite value {z}")
    return z


def to_float(a) -> complex:
    """
    Round an exact scalar to the nearest complex float.

    Args:
        a: GaussRational, Fraction, int, or an already-float value

    Returns:
        complex with finite components

    Raises:
        MagnitudeError: component too large for a float
    """
    if isinstance(a, (complex, float)):
        return check_finite(a)
    a = GaussRational.coerce(a)
    try:
        return check_finite(complex(float(a.re), float(a.im)))
    except OverflowError as exc:
        raise MagnitudeError(f"Value {a} overflows a float") from exc


def is_exact(x) -> bool:
    return isinstance(x, (GaussRational, Fraction, Integral)) and not isinstance(x, bool)


def zero_like(x) -> Scalar:
    return GaussRational(0) if is_exact(x) else 0j


def one_like(x) -> Scalar:
    return GaussRational(1) if is_exact(x) else 1 + 0j


def lift_scalar(value, exact: bool) -> Scalar:
    """Convert a number into the coefficient field chosen for the run"""
    if exact:
        return GaussRational.coerce(value)
    return to_float(value)


def conj(x) -> Scalar:
    return x.conjugate()


def abs2(x):
    """Squared modulus; exact Fraction for exact input, float otherwise"""
    if isinstance(x, GaussRational):
        return x.abs2()
    if is_exact(x):
        return Fraction(x) ** 2
    z = complex(x)
    return z.real * z.real + z.imag * z.imag


def magnitude(x) -> float:
    """Modulus as a float, for tolerances and scales"""
    if isinstance(x, GaussRational):
        return abs(to_float(x))
    return abs(complex(x))


def rational_sqrt(q: Fraction):
    """Exact square root of a nonnegative rational, or None when irrational"""
    q = Fraction(q)
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None
