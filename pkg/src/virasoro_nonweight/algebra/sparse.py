"""Sparse coordinate vectors over ℚ(i)."""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Iterator, Mapping
from typing import Generic, Self, TypeVar

from virasoro_nonweight.algebra.scalar import ZERO, GaussianRational, Number, as_scalar

K = TypeVar("K", bound=Hashable)


def accumulate(
    target: dict[K, GaussianRational], key: K, coeff: GaussianRational
) -> None:
    """Add coeff at key in place, dropping the entry if it cancels to zero."""
    if not coeff:
        return
    total = target.get(key, ZERO) + coeff
    if total:
        target[key] = total
    else:
        target.pop(key, None)


class SparseVector(Generic[K]):
    """
    A finitely supported vector with canonical storage.

    Only nonzero coordinates are kept, so two vectors are equal exactly when
    their coordinate maps are equal. Instances are treated as immutable.
    """

    __slots__ = ("coords",)

    coords: dict[K, GaussianRational]

    def __init__(self, coords: Mapping[K, Number] | None = None) -> None:
        clean: dict[K, GaussianRational] = {}
        for key, value in (coords or {}).items():
            c = as_scalar(value)
            if c:
                clean[key] = c
        self.coords = clean

    @classmethod
    def from_clean(cls, coords: dict[K, GaussianRational]) -> Self:
        """Wrap a coordinate dict that is already free of zeros (no copy)."""
        vec = cls.__new__(cls)
        vec.coords = coords
        return vec

    @classmethod
    def zero(cls) -> Self:
        return cls.from_clean({})

    @classmethod
    def basis(cls, key: K, coeff: Number = 1) -> Self:
        return cls({key: coeff})

    @classmethod
    def linear_combination(cls, pairs: Iterable[tuple[Number, SparseVector[K]]]) -> Self:
        out: dict[K, GaussianRational] = {}
        for c, vec in pairs:
            s = as_scalar(c)
            if not s:
                continue
            for key, value in vec.coords.items():
                accumulate(out, key, s * value)
        return cls.from_clean(out)

    def coefficient(self, key: K) -> GaussianRational:
        return self.coords.get(key, ZERO)

    def items(self) -> Iterator[tuple[K, GaussianRational]]:
        return iter(self.coords.items())

    def is_zero(self) -> bool:
        return not self.coords

    def __bool__(self) -> bool:
        return bool(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseVector):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self) -> int:
        return hash(frozenset(self.coords.items()))

    def __add__(self, other: SparseVector[K]) -> Self:
        out = dict(self.coords)
        for key, value in other.coords.items():
            accumulate(out, key, value)
        return self.from_clean(out)

    def __sub__(self, other: SparseVector[K]) -> Self:
        out = dict(self.coords)
        for key, value in other.coords.items():
            accumulate(out, key, -value)
        return self.from_clean(out)

    def __neg__(self) -> Self:
        return self.from_clean({key: -value for key, value in self.coords.items()})

    def scale(self, factor: Number) -> Self:
        s = as_scalar(factor)
        if not s:
            return self.zero()
        return self.from_clean({key: s * value for key, value in self.coords.items()})

    def __mul__(self, factor: Number) -> Self:
        return self.scale(factor)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        inner = ", ".join(f"{k!r}: {v}" for k, v in sorted(self.coords.items(), key=repr))
        return f"{type(self).__name__}({{{inner}}})"
