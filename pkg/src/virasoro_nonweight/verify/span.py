"""Incremental reduced row-echelon span over ℚ(i)."""

from __future__ import annotations

import logging
from collections.abc import Callable, Hashable, Iterable
from typing import Any, Generic, TypeVar

from virasoro_nonweight.algebra.scalar import GaussianRational
from virasoro_nonweight.algebra.sparse import SparseVector, accumulate

logger = logging.getLogger(__name__)

K = TypeVar("K", bound=Hashable)
V = TypeVar("V", bound=SparseVector[Any])


class SpanBasis(Generic[K]):
    """
    Reduced row-echelon basis of a growing subspace.

    Each row is stored under its pivot, the largest key of its support with
    respect to key_order, and has coefficient 1 there; no other row has a
    nonzero entry at that pivot. Membership is exact: a vector lies in the
    span iff its reduction is zero.
    """

    def __init__(self, key_order: Callable[[K], Any] | None = None) -> None:
        self._key_order: Callable[[K], Any] = key_order or (lambda key: key)
        self.rows: dict[K, dict[K, GaussianRational]] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def _reduce(self, coords: dict[K, GaussianRational]) -> dict[K, GaussianRational]:
        out = dict(coords)
        # reducing by one row never creates entries at another row's pivot
        for pivot in [key for key in coords if key in self.rows]:
            c = out.get(pivot)
            if not c:
                continue
            for key, value in self.rows[pivot].items():
                accumulate(out, key, -c * value)
        return out

    def reduce(self, vec: V) -> V:
        """The residual of vec after elimination against every row."""
        return vec.from_clean(self._reduce(vec.coords))

    def contains(self, vec: SparseVector[K]) -> bool:
        return not self._reduce(vec.coords)

    def add(self, vec: SparseVector[K]) -> K | None:
        """Insert vec; return the new pivot, or None if vec was already in the span."""
        residual = self._reduce(vec.coords)
        if not residual:
            return None
        pivot = max(residual, key=self._key_order)
        inv = residual[pivot].inverse()
        row = {key: value * inv for key, value in residual.items()}
        for other in self.rows.values():
            c = other.get(pivot)
            if c:
                for key, value in row.items():
                    accumulate(other, key, -c * value)
        self.rows[pivot] = row
        logger.debug(f"span rank {len(self.rows)} (new pivot {pivot!r})")
        return pivot

    def extend(self, vecs: Iterable[SparseVector[K]]) -> int:
        """Insert every vector; return how many raised the rank."""
        return sum(1 for vec in vecs if self.add(vec) is not None)

    def row(self, pivot: K) -> dict[K, GaussianRational]:
        return dict(self.rows[pivot])


def rank_of(vecs: Iterable[SparseVector[K]]) -> int:
    basis: SpanBasis[K] = SpanBasis()
    basis.extend(vecs)
    return basis.rank
