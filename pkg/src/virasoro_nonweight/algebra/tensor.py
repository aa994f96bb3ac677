"""
The module 𝓜(V, μ, Ω(λ,α)) = V ⊗ ℂ[∂].

    L_m(v ⊗ f) = v ⊗ λ^m(∂ - mα) f(∂ - m)
                 + (μ^m e^{mt}·d/dt - d/dt) v ⊗ λ^m f(∂ - m),
    C(v ⊗ f) = 0,

where d/dt = L₋₁ and e^{mt}·d/dt = Σ_i (mⁱ/i!) L_{i-1}. Elements are kept in
the monomial basis L₋₁ᵏ e_s ⊗ ∂ⁿ under the key (k, s, n).
"""

from __future__ import annotations

import json
import logging
import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Literal

from virasoro_nonweight.algebra.cache import DEFAULT_MAX_ENTRIES, BoundedCache
from virasoro_nonweight.algebra.errors import ElementParseError, ParameterError
from virasoro_nonweight.algebra.hmod import BModuleSpec, InducedElement, exp_basis
from virasoro_nonweight.algebra.omega import OmegaParams, omega_action
from virasoro_nonweight.algebra.poly import Poly, shifted_power
from virasoro_nonweight.algebra.scalar import (
    ONE,
    GaussianRational,
    Number,
    ScalarParseError,
    as_scalar,
    factorial,
    format_scalar,
    parse_scalar,
)
from virasoro_nonweight.algebra.sparse import SparseVector, accumulate

logger = logging.getLogger(__name__)

Key = tuple[int, int, int]
Generator = int | Literal["C"]

_TERM = re.compile(
    r"\s*(?P<l>L-1(?:\^(?P<k>\d{1,6}))?\s*)?e_(?P<s>\d{1,6})(?:\s*d\^(?P<n>\d{1,6}))?"
    r"\s*\*\s*(?P<c>\([^)]*\)|[^\s+()]+)\s*"
)


def _index(term: dict[str, Any], name: str) -> int:
    value = term[name]
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an integer, got {value!r}")
    return value


@dataclass(frozen=True, slots=True)
class TensorParams:
    """The triple (μ, λ, α); μ and λ must be nonzero."""

    mu: GaussianRational
    omega: OmegaParams

    def __post_init__(self) -> None:
        object.__setattr__(self, "mu", as_scalar(self.mu))
        if not self.mu:
            raise ParameterError("mu must be nonzero")

    @classmethod
    def of(cls, mu: Number | str, lam: Number | str, alpha: Number | str) -> TensorParams:
        return cls(as_scalar(mu), OmegaParams.of(lam, alpha))

    @property
    def lam(self) -> GaussianRational:
        return self.omega.lam

    @property
    def alpha(self) -> GaussianRational:
        return self.omega.alpha

    def echo(self) -> dict[str, str]:
        return {"mu": format_scalar(self.mu), **self.omega.echo()}


class TensorElement(SparseVector[Key]):
    """Element of V ⊗ ℂ[∂]; the key (k, s, n) stands for L₋₁ᵏ e_s ⊗ ∂ⁿ."""

    @classmethod
    def monomial(cls, k: int, s: int, n: int, c: Number | str = 1) -> TensorElement:
        return cls({(k, s, n): as_scalar(c)})

    @classmethod
    def pure(cls, v: InducedElement, f: Poly) -> TensorElement:
        """v ⊗ f."""
        out: dict[Key, GaussianRational] = {}
        for (k, s), c in v.items():
            for n, q in enumerate(f.coeffs):
                if q:
                    accumulate(out, (k, s, n), c * q)
        return cls.from_clean(out)

    def component(self, k: int, s: int) -> Poly:
        """The polynomial f with L₋₁ᵏ e_s ⊗ f the (k, s) part of this element."""
        degs = {n: c for (kk, ss, n), c in self.coords.items() if kk == k and ss == s}
        if not degs:
            return Poly.zero()
        return Poly(tuple(degs.get(n, GaussianRational(0)) for n in range(max(degs) + 1)))

    def max_k(self) -> int:
        return max((k for k, _, _ in self.coords), default=0)

    def max_n(self) -> int:
        return max((n for _, _, n in self.coords), default=0)

    def total_degree(self) -> int:
        return max((k + n for k, _, n in self.coords), default=0)

    def text(self) -> str:
        """Canonical text "L-1^k e_s d^n * c + …"; highest ∂-power first within a V-term."""
        if not self.coords:
            return "0"
        parts = []
        ordered = sorted(self.coords.items(), key=lambda kv: (kv[0][0], kv[0][1], -kv[0][2]))
        for (k, s, n), c in ordered:
            head = f"L-1^{k} e_{s}" if k else f"e_{s}"
            if n:
                head += f" d^{n}"
            cs = format_scalar(c)
            if c.re and c.im:
                cs = f"({cs})"
            parts.append(f"{head} * {cs}")
        return " + ".join(parts)

    def to_json(self) -> list[dict[str, Any]]:
        return [
            {"k": k, "s": s, "n": n, "c": format_scalar(c)}
            for (k, s, n), c in sorted(self.coords.items())
        ]

    @classmethod
    def from_text(cls, text: str) -> TensorElement:
        s = text.strip()
        if s in ("", "0"):
            return cls.zero()
        out: dict[Key, GaussianRational] = {}
        pos = 0
        while True:
            match = _TERM.match(s, pos)
            if match is None:
                raise ElementParseError(f"cannot parse element term at '{s[pos:]}'")
            if match["k"] is not None:
                k = int(match["k"])
            else:
                k = 1 if match["l"] else 0
            n = int(match["n"]) if match["n"] is not None else 0
            raw = match["c"].strip("()")
            try:
                c = parse_scalar(raw)
            except ScalarParseError as e:
                raise ElementParseError(str(e)) from e
            accumulate(out, (k, int(match["s"]), n), c)
            pos = match.end()
            if pos == len(s):
                break
            if s[pos] != "+":
                raise ElementParseError(f"expected '+' between terms at '{s[pos:]}'")
            pos += 1
        return cls.from_clean(out)

    @classmethod
    def from_json(cls, data: Any) -> TensorElement:
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as e:
                raise ElementParseError(f"invalid element JSON: {e}") from e
        if not isinstance(data, list):
            raise ElementParseError("element JSON must be a list of terms")
        out: dict[Key, GaussianRational] = {}
        for i, term in enumerate(data):
            if not isinstance(term, dict):
                raise ElementParseError(f"term {i} is not an object")
            try:
                k, s, n = (_index(term, name) for name in ("k", "s", "n"))
                c = parse_scalar(str(term["c"]))
            except KeyError as e:
                raise ElementParseError(f"term {i}: missing {e}") from e
            except (TypeError, ValueError) as e:
                raise ElementParseError(f"term {i}: {e}") from e
            if min(k, s, n) < 0:
                raise ElementParseError(f"term {i}: indices must be nonnegative")
            accumulate(out, (k, s, n), c)
        return cls.from_clean(out)


class TensorModule:
    """
    The action of 𝓛 on 𝓜(V, μ, Ω(λ,α)) for fixed parameters and V_𝔅.

    Images of basis monomials are cached per instance, at most cache_size of them. With
    drop_correction=True the "- d/dt" part of the second summand is left out;
    suites use that corrupted action as a negative control.
    """

    def __init__(
        self,
        params: TensorParams,
        spec: BModuleSpec,
        *,
        drop_correction: bool = False,
        cache_size: int = DEFAULT_MAX_ENTRIES,
    ) -> None:
        self.params = params
        self.spec = spec
        self.drop_correction = drop_correction
        self._images: BoundedCache[tuple[int, int, int, int], dict[Key, GaussianRational]] = (
            BoundedCache(cache_size)
        )

    def _validate(self, x: TensorElement) -> None:
        for k, s, _ in x.coords:
            if s >= self.spec.dim:
                raise ParameterError(f"basis index e_{s} exceeds dimension {self.spec.dim}")
            if k and not self.spec.induced:
                raise ParameterError("the trivial module has no L-1 powers")

    def basis_image(self, m: int, k: int, s: int, n: int) -> dict[Key, GaussianRational]:
        """L_m(L₋₁ᵏ e_s ⊗ ∂ⁿ)."""
        key = (m, k, s, n)
        cached = self._images.get(key)
        if cached is not None:
            return cached
        out: dict[Key, GaussianRational] = {}
        for j, q in enumerate(omega_action(self.params.omega, m, Poly.monomial(n)).coeffs):
            if q:
                out[(k, s, j)] = q
        # the twist (μ^m e^{mt} - 1)·d/dt vanishes at m = 0
        if m != 0 or self.drop_correction:
            mu_m = self.params.mu**m
            twist: dict[tuple[int, int], GaussianRational] = {}
            for vk, c in exp_basis(self.spec, m, k, s).items():
                accumulate(twist, vk, mu_m * c)
            if not self.drop_correction and self.spec.induced:
                accumulate(twist, (k + 1, s), -ONE)
            tail = shifted_power(m, n).scale(self.params.lam**m)
            for (kk, t), c in twist.items():
                for j, q in enumerate(tail.coeffs):
                    if q:
                        accumulate(out, (kk, t, j), c * q)
        self._images.put(key, out)
        return out

    def act(self, m: int, x: TensorElement) -> TensorElement:
        """L_m x."""
        self._validate(x)
        out: dict[Key, GaussianRational] = {}
        for (k, s, n), c in x.items():
            for key, v in self.basis_image(m, k, s, n).items():
                accumulate(out, key, c * v)
        return TensorElement.from_clean(out)

    def central(self, x: TensorElement) -> TensorElement:
        return TensorElement.zero()

    def apply_word(self, word: Sequence[Generator], x: TensorElement) -> TensorElement:
        """
        Act by the monomial g_1 g_2 … g_r of the enveloping algebra.

        The rightmost generator acts first, so [1, -1] means L_1 L₋₁.
        """
        for g in reversed(word):
            x = self.central(x) if g == "C" else self.act(int(g), x)
        return x


@lru_cache(maxsize=64)
def tensor_module(
    params: TensorParams, spec: BModuleSpec, drop_correction: bool = False
) -> TensorModule:
    return TensorModule(params, spec, drop_correction=drop_correction)


def l_action(p: TensorParams, spec: BModuleSpec, m: int, x: TensorElement) -> TensorElement:
    """L_m x in 𝓜(V, μ, Ω(λ,α))."""
    return tensor_module(p, spec).act(m, x)


def central_action(x: TensorElement) -> TensorElement:
    """C x = 0."""
    return TensorElement.zero()


def apply_word(
    p: TensorParams, spec: BModuleSpec, word: Sequence[Generator], x: TensorElement
) -> TensorElement:
    return tensor_module(p, spec).apply_word(word, x)


def parse_word(text: str) -> list[Generator]:
    """Parse a generator list such as "[1, -1]", "[C]" or "0 2"."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    word: list[Generator] = []
    for token in filter(None, re.split(r"[\s,]+", body)):
        if token.upper() == "C":
            word.append("C")
            continue
        try:
            word.append(int(token))
        except ValueError as e:
            raise ElementParseError(f"invalid generator '{token}' in word") from e
    return word


@dataclass(frozen=True, slots=True)
class FModuleView:
    """F(V_𝔅, Ω(λ,α)): the μ = 1 module on V_𝔅 ⊗ ℂ[∂] with no L₋₁ part."""

    omega: OmegaParams
    spec: BModuleSpec

    @property
    def params(self) -> TensorParams:
        return TensorParams(ONE, self.omega)

    def basis(self, n_max: int) -> Iterable[TensorElement]:
        for s in range(self.spec.dim):
            for n in range(n_max + 1):
                yield TensorElement.monomial(0, s, n)


def f_action(view: FModuleView, m: int, x: TensorElement) -> TensorElement:
    """
    L_m(v ⊗ f) = v ⊗ λ^m(∂-mα) f(∂-m) + Σ_{i≥1} (mⁱ/i!) L_{i-1} v ⊗ λ^m f(∂-m).

    Inputs must have no L₋₁ powers; the result has none either.
    """
    spec = view.spec
    lam_m = view.omega.lam**m
    mm = as_scalar(m)
    out: dict[Key, GaussianRational] = {}
    for (k, s, n), c in x.items():
        if k:
            raise ParameterError("F-module elements carry no L-1 powers")
        for j, q in enumerate(omega_action(view.omega, m, Poly.monomial(n)).coeffs):
            if q:
                accumulate(out, (0, s, j), c * q)
        if m == 0:
            continue
        tail = shifted_power(m, n).scale(lam_m)
        for i in range(1, spec.order + 2):
            weight = mm**i / factorial(i)
            for t, a in spec.act_on_basis(i - 1, s).items():
                for j, q in enumerate(tail.coeffs):
                    if q:
                        accumulate(out, (0, t, j), c * weight * a * q)
    return TensorElement.from_clean(out)
