"""
Exact arithmetic over the Gaussian rationals ℚ(i).

Every coefficient in the package is a GaussianRational: a pair of Fractions
(re, im) standing for re + im·i. Fractions keep their own canonical form
(positive denominator, coprime parts), so equality is structural.

Text grammar (used by configuration files and the CLI):

    rat   := ['-'] digits ['/' digits]
    gauss := rat | [rat ('+'|'-')] [rat] 'i'

Examples: "2", "-1/3", "1/2+3i", "-i".
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union


class ScalarParseError(ValueError):
    """Raised when text does not follow the scalar grammar."""

    pass


_RAT = r"\d+(?:/\d+)?"
_REAL_ONLY = re.compile(rf"^-?{_RAT}$")
_IMAG_ONLY = re.compile(rf"^(-?)({_RAT})?i$")
_COMPLEX = re.compile(rf"^(-?{_RAT})([+-])({_RAT})?i$")


@dataclass(frozen=True, slots=True)
class GaussianRational:
    """An exact element re + im·i of ℚ(i)."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        if not isinstance(self.re, Fraction):
            object.__setattr__(self, "re", Fraction(self.re))
        if not isinstance(self.im, Fraction):
            object.__setattr__(self, "im", Fraction(self.im))

    # Equality and hashing agree with int and Fraction for real values,
    # so GaussianRational(2) == 2 and both hash alike.
    def __eq__(self, other: object) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def __neg__(self) -> GaussianRational:
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other: Number) -> GaussianRational:
        o = as_scalar(other)
        if not self.im and not o.im:
            return GaussianRational(self.re + o.re)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: Number) -> GaussianRational:
        o = as_scalar(other)
        if not self.im and not o.im:
            return GaussianRational(self.re - o.re)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: Number) -> GaussianRational:
        return as_scalar(other) - self

    def __mul__(self, other: Number) -> GaussianRational:
        o = as_scalar(other)
        if not self.im and not o.im:
            return GaussianRational(self.re * o.re)
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """The field norm re² + im²."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> GaussianRational:
        if not self:
            raise ZeroDivisionError("GaussianRational division by zero")
        if self.im == 0:
            return GaussianRational(1 / self.re)
        n = self.norm()
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other: Number) -> GaussianRational:
        return self * as_scalar(other).inverse()

    def __rtruediv__(self, other: Number) -> GaussianRational:
        return as_scalar(other) * self.inverse()

    def __pow__(self, exponent: int) -> GaussianRational:
        if not isinstance(exponent, int):
            raise TypeError("only integer exponents are supported")
        if exponent == 0:
            # 0^0 = 1, the convention of the exponential series
            return ONE
        if exponent < 0:
            return self.inverse() ** (-exponent)
        if self.im == 0:
            return GaussianRational(self.re**exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"GaussianRational('{format_scalar(self)}')"


Number = Union[GaussianRational, Fraction, int]

ZERO = GaussianRational(Fraction(0))
ONE = GaussianRational(Fraction(1))
I = GaussianRational(Fraction(0), Fraction(1))


def as_scalar(value: Number | str) -> GaussianRational:
    """Coerce an int, Fraction, GaussianRational or grammar string to a GaussianRational."""
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(Fraction(value))
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")


def _parse_rat(text: str) -> Fraction:
    num, _, den = text.partition("/")
    try:
        numerator, denominator = int(num), int(den) if den else 1
    except ValueError as e:
        # int() refuses strings past the interpreter's digit limit
        raise ScalarParseError(f"cannot read '{text[:40]}': {e}") from e
    if denominator == 0:
        raise ScalarParseError(f"zero denominator in '{text}'")
    return Fraction(numerator, denominator)


def parse_scalar(text: str) -> GaussianRational:
    """Parse a scalar written in the grammar of this module."""
    s = text.strip()
    if _REAL_ONLY.match(s):
        return GaussianRational(_parse_rat(s))
    if match := _IMAG_ONLY.match(s):
        sign, rat = match.groups()
        im = _parse_rat(rat) if rat else Fraction(1)
        return GaussianRational(Fraction(0), -im if sign else im)
    if match := _COMPLEX.match(s):
        real, sign, rat = match.groups()
        im = _parse_rat(rat) if rat else Fraction(1)
        return GaussianRational(_parse_rat(real), -im if sign == "-" else im)
    raise ScalarParseError(f"invalid scalar '{text}'")


def _format_rat(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_scalar(value: GaussianRational) -> str:
    """Render a scalar so that parse_scalar reads it back unchanged."""
    if value.im == 0:
        return _format_rat(value.re)
    mag = abs(value.im)
    imag = "i" if mag == 1 else f"{_format_rat(mag)}i"
    if value.re == 0:
        return f"-{imag}" if value.im < 0 else imag
    sign = "-" if value.im < 0 else "+"
    return f"{_format_rat(value.re)}{sign}{imag}"


@lru_cache(maxsize=256)
def factorial(n: int) -> GaussianRational:
    """n! as a scalar, with k! = 1 for k < 0."""
    if n < 0:
        return ONE
    return GaussianRational(Fraction(math.factorial(n)))


@lru_cache(maxsize=4096)
def binomial(n: int, k: int) -> GaussianRational:
    """C(n, k) as a scalar, zero for k < 0 or k > n."""
    if k < 0 or k > n:
        return ZERO
    return GaussianRational(Fraction(math.comb(n, k)))
