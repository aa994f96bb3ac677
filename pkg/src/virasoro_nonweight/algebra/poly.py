"""
Dense polynomials in the indeterminate ∂ over ℚ(i).

Polynomials are immutable tuples of coefficients, constant term first,
trimmed so the leading coefficient is nonzero. The zero polynomial has the
empty tuple and degree -inf.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import lru_cache

from virasoro_nonweight.algebra.scalar import (
    ONE,
    ZERO,
    GaussianRational,
    Number,
    as_scalar,
    format_scalar,
)


def _trim(coeffs: Iterable[GaussianRational]) -> tuple[GaussianRational, ...]:
    out = list(coeffs)
    while out and not out[-1]:
        out.pop()
    return tuple(out)


@dataclass(frozen=True, slots=True)
class Poly:
    """A polynomial c0 + c1·∂ + c2·∂² + … with exact coefficients."""

    coeffs: tuple[GaussianRational, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _trim(as_scalar(c) for c in self.coeffs))

    @classmethod
    def of(cls, *coeffs: Number | str) -> Poly:
        """Build from coefficients given constant term first."""
        return cls(tuple(as_scalar(c) for c in coeffs))

    @classmethod
    def zero(cls) -> Poly:
        return cls(())

    @classmethod
    def constant(cls, c: Number | str) -> Poly:
        return cls((as_scalar(c),))

    @classmethod
    def monomial(cls, n: int, c: Number | str = 1) -> Poly:
        """c·∂ⁿ."""
        return cls((ZERO,) * n + (as_scalar(c),))

    @property
    def degree(self) -> int | float:
        """Degree, or -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, n: int) -> GaussianRational:
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else ZERO

    def __call__(self, x: Number) -> GaussianRational:
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: Poly) -> Poly:
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __neg__(self) -> Poly:
        return Poly(tuple(-c for c in self.coeffs))

    def __mul__(self, other: Poly | Number) -> Poly:
        if not isinstance(other, Poly):
            return self.scale(other)
        if not self.coeffs or not other.coeffs:
            return Poly.zero()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return Poly(tuple(out))

    def __rmul__(self, other: Number) -> Poly:
        return self.scale(other)

    def scale(self, c: Number | str) -> Poly:
        s = as_scalar(c)
        if not s:
            return Poly.zero()
        return Poly(tuple(s * a for a in self.coeffs))

    def times_d(self) -> Poly:
        """∂·f."""
        if not self.coeffs:
            return self
        return Poly((ZERO,) + self.coeffs)

    def shift(self, m: Number | str) -> Poly:
        return shift(self, m)

    def text(self) -> str:
        return format_poly(self)

    def __str__(self) -> str:
        return format_poly(self)


D = Poly.monomial(1)


def shift(f: Poly, m: Number | str) -> Poly:
    """
    Return g with g(∂) = f(∂ - m).

    Horner's scheme on the substituted variable: g = (…(c_d·(∂-m) + c_{d-1})·(∂-m) + …) + c_0.
    """
    a = as_scalar(m)
    if not a or not f.coeffs:
        return f
    acc: list[GaussianRational] = []
    for c in reversed(f.coeffs):
        # acc <- acc·(∂ - a) + c
        nxt = [ZERO] * (len(acc) + 1)
        for i, v in enumerate(acc):
            nxt[i + 1] = nxt[i + 1] + v
            nxt[i] = nxt[i] - a * v
        nxt[0] = nxt[0] + c
        acc = nxt
    return Poly(tuple(acc))


@lru_cache(maxsize=4096)
def shifted_power(m: int, n: int) -> Poly:
    """(∂ - m)ⁿ."""
    return shift(Poly.monomial(n), m)


@lru_cache(maxsize=4096)
def j_basis(m: int, n: int) -> Poly:
    """J_m^n = (∂-(m+1))(∂-(m+2))…(∂-(m+n)), with J_m^0 = 1."""
    if n < 0:
        raise ValueError(f"J-basis index n must be nonnegative, got {n}")
    if n == 0:
        return Poly((ONE,))
    return j_basis(m, n - 1) * Poly.of(-(m + n), 1)


def to_j_basis(f: Poly, m: int) -> list[GaussianRational]:
    """Coefficients c_n with f = Σ c_n·J_m^n (every J_m^n is monic of degree n)."""
    if not f.coeffs:
        return []
    out = [ZERO] * len(f.coeffs)
    rest = f
    for n in range(len(f.coeffs) - 1, -1, -1):
        c = rest.coeff(n)
        if c:
            out[n] = c
            rest = rest - j_basis(m, n).scale(c)
    return out


def from_j_basis(coeffs: Sequence[Number], m: int) -> Poly:
    """Σ coeffs[n]·J_m^n."""
    acc = Poly.zero()
    for n, c in enumerate(coeffs):
        if c:
            acc = acc + j_basis(m, n).scale(c)
    return acc


def format_poly(f: Poly) -> str:
    """Text form "c0 + c1*d + c2*d^2" over the nonzero terms; "0" for the zero polynomial."""
    if not f.coeffs:
        return "0"
    parts = []
    for n, c in enumerate(f.coeffs):
        if not c:
            continue
        s = format_scalar(c)
        if c.re and c.im and n > 0:
            s = f"({s})"
        if n == 0:
            parts.append(s)
        elif n == 1:
            parts.append(f"{s}*d")
        else:
            parts.append(f"{s}*d^{n}")
    return " + ".join(parts)
