"""
Finite-dimensional 𝔅-modules and the 𝔞-modules induced from them.

𝔞 = span{L_i | i ≥ -1} and 𝔅 = span{L_i | i ≥ 0} with [L_i, L_j] = (j-i)L_{i+j}.
A BModuleSpec gives matrices M_0, …, M_r for L_0, …, L_r on a d-dimensional
space V_𝔅 (L_j acts as zero for j > r). The induced module is ℂ[L₋₁] ⊗ V_𝔅,
and an InducedElement stores the coordinate of L₋₁ᵏ e_s under the key (k, s).

L_i is brought past L₋₁ with L_i L₋₁ = L₋₁ L_i + (-1-i) L_{i-1}.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any, Literal

from virasoro_nonweight.algebra.cache import BoundedCache
from virasoro_nonweight.algebra.errors import ModuleSpecError, ParameterError
from virasoro_nonweight.algebra.scalar import (
    ONE,
    ZERO,
    GaussianRational,
    Number,
    as_scalar,
    binomial,
    factorial,
    format_scalar,
)
from virasoro_nonweight.algebra.sparse import SparseVector, accumulate

logger = logging.getLogger(__name__)

Matrix = tuple[tuple[GaussianRational, ...], ...]
SpecKind = Literal["highest_weight", "trivial", "matrices"]
Coords = dict[tuple[int, int], GaussianRational]


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum((a[r][t] * b[t][c] for t in range(n)), ZERO) for c in range(n))
        for r in range(n)
    )


def _mat_combine(a: Matrix, b: Matrix, sa: Number = 1, sb: Number = 1) -> Matrix:
    return tuple(
        tuple(a[r][c] * sa + b[r][c] * sb for c in range(len(a))) for r in range(len(a))
    )


def _is_zero_matrix(a: Matrix) -> bool:
    return all(not entry for row in a for entry in row)


def _rank(a: Matrix) -> int:
    rows = [list(row) for row in a]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][col].inverse()
        rows[rank] = [v * inv for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [v - f * w for v, w in zip(rows[r], rows[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class BModuleSpec:
    """
    Matrices M_0, …, M_r of a finite-dimensional 𝔅-module V_𝔅.

    `induced` selects the module this data stands for: True gives the induced
    𝔞-module ℂ[L₋₁] ⊗ V_𝔅, False the trivial 𝔞-module (L₋₁ acts as zero too),
    which is only allowed when every M_i is zero.
    """

    dim: int
    order: int
    matrices: tuple[Matrix, ...]
    kind: SpecKind = "matrices"
    induced: bool = True
    _cache: BoundedCache[Any, Any] = field(
        default_factory=BoundedCache, init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ModuleSpecError(f"dimension must be positive, got {self.dim}")
        if self.order < 0:
            raise ModuleSpecError(f"order must be nonnegative, got {self.order}")
        if len(self.matrices) != self.order + 1:
            raise ModuleSpecError(
                f"expected {self.order + 1} matrices M_0..M_{self.order}, got {len(self.matrices)}"
            )
        mats = []
        for i, m in enumerate(self.matrices):
            if len(m) != self.dim or any(len(row) != self.dim for row in m):
                raise ModuleSpecError(f"M_{i} must be a {self.dim}x{self.dim} matrix")
            mats.append(tuple(tuple(as_scalar(v) for v in row) for row in m))
        object.__setattr__(self, "matrices", tuple(mats))

        if self.order > 0 and _is_zero_matrix(self.matrices[self.order]):
            raise ModuleSpecError(f"declared order {self.order} but M_{self.order} is zero")
        if not self.induced and not self.is_trivial:
            raise ModuleSpecError("only the trivial module may be taken non-induced")
        self._check_brackets()

    def _check_brackets(self) -> None:
        zero = tuple(tuple(ZERO for _ in range(self.dim)) for _ in range(self.dim))
        for i in range(self.order + 1):
            for j in range(i + 1, self.order + 1):
                lhs = _mat_combine(
                    _mat_mul(self.matrices[i], self.matrices[j]),
                    _mat_mul(self.matrices[j], self.matrices[i]),
                    1,
                    -1,
                )
                target = self.matrices[i + j] if i + j <= self.order else zero
                rhs = _mat_combine(target, zero, j - i, 0)
                if lhs != rhs:
                    raise ModuleSpecError(
                        f"bracket relation [L_{i}, L_{j}] = {j - i} L_{i + j} fails on the matrices"
                    )

    @classmethod
    def highest_weight(cls, beta: Number | str) -> BModuleSpec:
        """One-dimensional V_𝔅 with L_0 = β and L_i = 0 for i ≥ 1, induced to 𝔞."""
        return cls(1, 0, (((as_scalar(beta),),),), kind="highest_weight")

    @classmethod
    def trivial(cls, dim: int = 1) -> BModuleSpec:
        """The trivial 𝔞-module of dimension dim."""
        zero = tuple(tuple(ZERO for _ in range(dim)) for _ in range(dim))
        return cls(dim, 0, (zero,), kind="trivial", induced=False)

    @classmethod
    def from_matrices(
        cls, dim: int, order: int, matrices: Sequence[Sequence[Sequence[Number | str]]]
    ) -> BModuleSpec:
        mats = tuple(tuple(tuple(as_scalar(v) for v in row) for row in m) for m in matrices)
        return cls(dim, order, mats, kind="matrices")

    @property
    def is_trivial(self) -> bool:
        return all(_is_zero_matrix(m) for m in self.matrices)

    @property
    def is_highest_weight(self) -> bool:
        return self.induced and self.dim == 1 and self.order == 0

    @property
    def beta(self) -> GaussianRational | None:
        """The highest weight, for one-dimensional specs of order 0."""
        if self.dim == 1 and self.order == 0:
            return self.matrices[0][0][0]
        return None

    def top_acts_bijectively(self) -> bool:
        """Whether M_r is invertible."""
        return _rank(self.matrices[self.order]) == self.dim

    def act_on_basis(self, i: int, s: int) -> dict[int, GaussianRational]:
        """L_i e_s for i ≥ 0, as {t: coefficient of e_t} (column s of M_i)."""
        if i > self.order:
            return {}
        m = self.matrices[i]
        return {t: m[t][s] for t in range(self.dim) if m[t][s]}

    def basis_keys(self, k_max: int) -> list[tuple[int, int]]:
        """Keys (k, s) of the basis vectors L₋₁ᵏ e_s with k ≤ k_max."""
        top = k_max if self.induced else 0
        return [(k, s) for k in range(top + 1) for s in range(self.dim)]

    def echo(self) -> dict[str, Any]:
        if self.kind == "highest_weight" and self.beta is not None:
            return {"kind": "highest_weight", "beta": format_scalar(self.beta)}
        if self.kind == "trivial":
            return {"kind": "trivial", "dim": self.dim}
        return {
            "kind": "matrices",
            "dim": self.dim,
            "order": self.order,
            "L": [[[format_scalar(v) for v in row] for row in m] for m in self.matrices],
        }


class InducedElement(SparseVector[tuple[int, int]]):
    """Element of ℂ[L₋₁] ⊗ V_𝔅; the key (k, s) stands for L₋₁ᵏ e_s."""

    @classmethod
    def vector(cls, s: int = 0, k: int = 0) -> InducedElement:
        return cls.from_clean({(k, s): ONE})

    def max_exponent(self) -> int:
        return max((k for k, _ in self.coords), default=0)

    def text(self) -> str:
        if not self.coords:
            return "0"
        parts = []
        for (k, s), c in sorted(self.coords.items()):
            head = f"L-1^{k} e_{s}" if k else f"e_{s}"
            parts.append(f"{head} * {format_scalar(c)}")
        return " + ".join(parts)


@dataclass(frozen=True, slots=True)
class ElementOrder:
    """ord(x); annihilated_by_b marks vectors killed by every L_j with j ≥ 0."""

    value: int
    annihilated_by_b: bool = False


def _check_element(spec: BModuleSpec, x: InducedElement) -> None:
    if not spec.induced and any(k for k, _ in x.coords):
        raise ParameterError("the trivial module has no L-1 powers")


def _apply_basis(spec: BModuleSpec, i: int, k: int, s: int) -> Coords:
    """L_i(L₋₁ᵏ e_s), cached per BModuleSpec."""
    key = ("L", i, k, s)
    cached = spec._cache.get(key)
    if cached is not None:
        return cached
    out: Coords = {}
    if i == -1:
        if spec.induced:
            out = {(k + 1, s): ONE}
    elif k == 0:
        out = {(0, t): c for t, c in spec.act_on_basis(i, s).items()}
    elif i <= k + spec.order:
        for (kk, t), c in _apply_basis(spec, i, k - 1, s).items():
            accumulate(out, (kk + 1, t), c)
        for key2, c in _apply_basis(spec, i - 1, k - 1, s).items():
            accumulate(out, key2, c * (-1 - i))
    spec._cache.put(key, out)
    return out


def h_action(spec: BModuleSpec, i: int, x: InducedElement) -> InducedElement:
    """L_i x for i ≥ -1."""
    if i < -1:
        raise ParameterError(f"L_{i} is not in the subalgebra spanned by L_i, i >= -1")
    _check_element(spec, x)
    out: Coords = {}
    for (k, s), c in x.items():
        for key, v in _apply_basis(spec, i, k, s).items():
            accumulate(out, key, c * v)
    return InducedElement.from_clean(out)


def order(spec: BModuleSpec, x: InducedElement) -> ElementOrder:
    """
    ord(x): the least r ≥ 0 with L_j x = 0 for all j > r.

    L_j x vanishes for j above (largest L₋₁ power in x) + spec.order, so j is
    tested downward from that bound. A vector killed by every L_j (j ≥ 0)
    gets order 0 with the annihilated_by_b flag.
    """
    if x.is_zero():
        raise ParameterError("ord is undefined for the zero vector")
    _check_element(spec, x)
    bound = x.max_exponent() + spec.order
    for j in range(bound, -1, -1):
        if h_action(spec, j, x):
            return ElementOrder(j)
    return ElementOrder(0, annihilated_by_b=True)


def _exp_sum(spec: BModuleSpec, m: int, x: InducedElement, top: int) -> InducedElement:
    mm = as_scalar(m)
    return InducedElement.linear_combination(
        ((mm**i / factorial(i), h_action(spec, i - 1, x)) for i in range(top + 1))
    )


def exp_derivation(
    spec: BModuleSpec, m: int, x: InducedElement, *, extra_terms: int = 0
) -> InducedElement:
    """e^{mt}·d/dt applied to x: Σ_{i=0}^{ord(x)+1} (mⁱ/i!)·L_{i-1} x."""
    if x.is_zero():
        return x
    top = order(spec, x).value + 1 + extra_terms
    return _exp_sum(spec, m, x, top)


def exp_basis(spec: BModuleSpec, m: int, k: int, s: int) -> Coords:
    """exp_derivation on the pure vector L₋₁ᵏ e_s, cached per BModuleSpec."""
    key = ("E", m, k, s)
    cached = spec._cache.get(key)
    if cached is None:
        cached = exp_derivation(spec, m, InducedElement.vector(s, k)).coords
        spec._cache.put(key, cached)
    return cached


def exp_coefficients(spec: BModuleSpec, x: InducedElement) -> list[InducedElement]:
    """
    Vectors c_j = L_{j-1} x / j! with e^{mt}·d/dt x = Σ_j m^j c_j for every m.

    Each c_j is a fixed vector, so the dependence on m is polynomial.
    """
    if x.is_zero():
        return []
    top = order(spec, x).value + 1
    return [h_action(spec, j - 1, x).scale(factorial(j).inverse()) for j in range(top + 1)]


def raise_power(spec: BModuleSpec, p: int, x: InducedElement) -> InducedElement:
    """L₋₁ᵖ x."""
    for _ in range(p):
        x = h_action(spec, -1, x)
    return x


def exp_shift_sides(
    spec: BModuleSpec, k: int, i: int, x: InducedElement
) -> tuple[InducedElement, InducedElement]:
    """
    Both sides of (e^{kt}·d/dt) L₋₁ⁱ = (L₋₁ - k)ⁱ e^{kt}·d/dt evaluated on x.

    The right side expands (L₋₁ - k)ⁱ = Σ_p C(i,p)(-k)^{i-p} L₋₁ᵖ.
    """
    lhs = exp_derivation(spec, k, raise_power(spec, i, x))
    ex = exp_derivation(spec, k, x)
    minus_k = as_scalar(-k)
    rhs = InducedElement.linear_combination(
        (binomial(i, p) * minus_k ** (i - p), raise_power(spec, p, ex)) for p in range(i + 1)
    )
    return lhs, rhs


def check_exp_shift_identity(spec: BModuleSpec, k: int, i: int, x: InducedElement) -> bool:
    lhs, rhs = exp_shift_sides(spec, k, i, x)
    return lhs == rhs


def bracket_check_h(spec: BModuleSpec, i: int, j: int, x: InducedElement) -> bool:
    """(L_i L_j - L_j L_i) x == (j - i) L_{i+j} x."""
    lhs = h_action(spec, i, h_action(spec, j, x)) - h_action(spec, j, h_action(spec, i, x))
    if i + j < -1:
        # only i = j = -1 gets here, where the coefficient j - i is zero
        rhs = InducedElement.zero()
    else:
        rhs = h_action(spec, i + j, x).scale(j - i)
    return lhs == rhs
