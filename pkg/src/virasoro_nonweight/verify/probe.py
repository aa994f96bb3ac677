"""
Windowed cyclic-submodule probes.

The submodule generated by a seed is approximated by exact linear algebra inside an
outer window: images of everything found so far are reduced against a basis whose
pivots prefer keys outside the window, so a row with an inside pivot lies wholly in
the window and is a genuine element of the submodule. Results are evidence, not proof.
"""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterable

from virasoro_nonweight.algebra.errors import ParameterError
from virasoro_nonweight.algebra.hmod import BModuleSpec, InducedElement, h_action, order
from virasoro_nonweight.algebra.poly import D, Poly
from virasoro_nonweight.algebra.tensor import TensorElement, TensorModule, TensorParams
from virasoro_nonweight.models import TruncationWindow, VerifyReport
from virasoro_nonweight.verify.context import SuiteContext
from virasoro_nonweight.verify.span import SpanBasis
from virasoro_nonweight.verify.submodule import quotient_map, tau

logger = logging.getLogger(__name__)

Key = tuple[int, int, int]


class WindowedClosure:
    """The part of the submodule generated by some seeds that is visible inside a window."""

    def __init__(self, module: TensorModule, outer: TruncationWindow) -> None:
        self.module = module
        self.outer = outer
        self.span: SpanBasis[Key] = SpanBasis(key_order=self._key_order)
        self.inside: list[TensorElement] = []

    def _inside(self, key: Key) -> bool:
        k, _, n = key
        return self.outer.contains(k, n)

    def _key_order(self, key: Key) -> tuple[int, int, int, int]:
        k, s, n = key
        return (0 if self._inside(key) else 1, k, n, s)

    def run(self, seeds: Iterable[TensorElement]) -> WindowedClosure:
        queue: deque[TensorElement] = deque()
        for seed in seeds:
            self._offer(seed, queue)
        while queue:
            x = queue.popleft()
            for m in self.outer.m_values:
                self._offer(self.module.act(m, x), queue)
        logger.debug(f"closure: {len(self.inside)} inside rows, rank {self.span.rank}")
        return self

    def _offer(self, x: TensorElement, queue: deque[TensorElement]) -> None:
        pivot = self.span.add(x)
        if pivot is not None and self._inside(pivot):
            row = TensorElement.from_clean(self.span.row(pivot))
            self.inside.append(row)
            queue.append(row)

    def contains(self, x: TensorElement) -> bool:
        return self.span.contains(x)

    def inside_rows(self) -> list[TensorElement]:
        """Current reduced rows with inside pivots; all their keys are inside too."""
        return [
            TensorElement.from_clean(self.span.row(p)) for p in self.span.rows if self._inside(p)
        ]


def _inner_keys(spec: BModuleSpec, inner: TruncationWindow) -> list[Key]:
    return [(k, s, n) for k, s in spec.basis_keys(inner.k_max) for n in range(inner.n_max + 1)]


def simplicity_probe(
    p: TensorParams,
    spec: BModuleSpec,
    seed: TensorElement,
    window: TruncationWindow,
    inner_window: TruncationWindow,
) -> VerifyReport:
    """
    Does the submodule generated by seed reach every monomial of the inner window?

    The report is evidence_only; its single case records whether the inner window
    was covered, with the uncovered monomials in got.
    """
    if seed.is_zero():
        raise ParameterError("the probe seed must be nonzero")
    if inner_window.k_max >= window.k_max or inner_window.n_max >= window.n_max:
        raise ParameterError("the inner window must be strictly smaller than the outer one")
    closure = WindowedClosure(TensorModule(p, spec), window).run([seed])
    missing = [
        key
        for key in _inner_keys(spec, inner_window)
        if not closure.contains(TensorElement.monomial(*key))
    ]
    report = VerifyReport(
        suite="probe",
        params={
            **p.echo(),
            "vb": spec.echo(),
            "window": window.model_dump(),
            "inner_window": inner_window.model_dump(),
        },
        evidence_only=True,
    )
    report.add_case(
        "seed generates the inner window",
        passed=not missing,
        inputs={"seed": seed.to_json(), "inside_rank": len(closure.inside_rows())},
        got=[{"k": k, "s": s, "n": n} for k, s, n in missing[:10]] or "covered",
    )
    return report


def probe_suite(ctx: SuiteContext) -> VerifyReport:
    """
    Probe the configured module and check the answer matches the simplicity criterion.

    α ≠ 0 and μ ≠ 1 must give a cyclic seed. For μ = 1 the closure of e_0 ⊗ 1 must stay
    at L₋₁-degree 0; for α = 0 the closure of τ(e_0 ⊗ 1) must lie in the kernel of π.
    """
    p, spec = ctx.params, ctx.spec
    outer, inner = ctx.probe_outer, ctx.probe_inner
    expect_simple = bool(p.alpha) and p.mu != 1
    if expect_simple or (not spec.induced and p.alpha):
        report = simplicity_probe(p, spec, TensorElement.monomial(0, 0, 0), outer, inner)
        report.params["expected"] = "cyclic"
        if spec.induced and outer.k_max >= 1 and outer.n_max >= 1:
            # second seed L₋₁ e_0 ⊗ ∂
            second = simplicity_probe(p, spec, TensorElement.monomial(1, 0, 1), outer, inner)
            report.cases.extend(second.cases)
        return report

    report = VerifyReport(
        suite="probe",
        params={**p.echo(), "vb": spec.echo(), "window": outer.model_dump()},
        evidence_only=True,
    )
    module = TensorModule(p, spec)
    if p.alpha and spec.induced:
        # μ = 1: V^(0) = V_𝔅 ⊗ ℂ[∂] is a proper submodule
        closure = WindowedClosure(module, outer).run([TensorElement.monomial(0, 0, 0)])
        escaped = [row for row in closure.inside_rows() if row.max_k() > 0]
        report.add_case(
            "closure of e_0 x 1 stays in V^(0)",
            passed=not escaped,
            inputs={"inside_rank": len(closure.inside)},
            witness=escaped[0].to_json() if escaped else None,
        )
        return report

    if not spec.induced:
        # trivial V_𝔅 and α = 0: ∂ℂ[∂] is a proper submodule
        closure = WindowedClosure(module, outer).run([TensorElement.monomial(0, 0, 1)])
        constants = [row for row in closure.inside_rows() if row.coefficient((0, 0, 0))]
        report.add_case(
            "closure of e_0 x d avoids constants",
            passed=not constants,
            inputs={"inside_rank": len(closure.inside)},
            witness=constants[0].to_json() if constants else None,
        )
        return report

    seed = tau(TensorElement.monomial(0, 0, 0), spec)
    closure = WindowedClosure(module, outer).run([seed])
    leaks = [row for row in closure.inside_rows() if quotient_map(row)]
    report.add_case(
        "closure of tau(e_0 x 1) lies in ker pi",
        passed=not leaks,
        inputs={"seed": seed.to_json(), "inside_rank": len(closure.inside)},
        witness=leaks[0].to_json() if leaks else None,
    )
    return report


def top_nonvanishing_index(spec: BModuleSpec, u: InducedElement) -> int:
    """The largest r ≥ -1 with L_r u ≠ 0."""
    ord_u = order(spec, u)
    if not ord_u.annihilated_by_b:
        return ord_u.value
    return -1 if spec.induced else -2


def pure_tensor_suite(ctx: SuiteContext) -> VerifyReport:
    """
    For μ ≠ 1 the submodule generated by u ⊗ ∂ contains (L_r u) ⊗ ℂ[∂], r the
    largest index with L_r u ≠ 0; also L_0ⁱ(v ⊗ 1) = v ⊗ ∂ⁱ.
    """
    p, spec = ctx.params, ctx.spec
    if p.mu == 1:
        raise ParameterError("pure-tensor generation needs mu != 1")
    outer, inner = ctx.probe_outer, ctx.probe_inner
    module = TensorModule(p, spec)
    report = VerifyReport(
        suite="pure-tensor",
        params={**p.echo(), "vb": spec.echo(), "window": outer.model_dump()},
        evidence_only=True,
    )

    powers_ok = True
    for s in range(spec.dim):
        x = TensorElement.monomial(0, s, 0)
        for i in range(1, outer.n_max + 1):
            x = module.act(0, x)
            powers_ok &= x == TensorElement.monomial(0, s, i)
    report.add_case("L_0^i (e_s x 1) == e_s x d^i", passed=powers_ok)

    vectors = [InducedElement.vector(s) for s in range(spec.dim)]
    if spec.induced:
        vectors.append(InducedElement.vector(0, k=1))
    for u in vectors:
        r = top_nonvanishing_index(spec, u)
        if r < -1:
            report.add_case(
                f"closure of ({u.text()}) x d",
                passed=True,
                note="not applicable: u is killed by every L_i",
            )
            continue
        top = h_action(spec, r, u)
        closure = WindowedClosure(module, outer).run([TensorElement.pure(u, D)])
        targets = [TensorElement.pure(top, Poly.monomial(i)) for i in range(inner.n_max + 1)]
        missing = [i for i, t in enumerate(targets) if not closure.contains(t)]
        report.add_case(
            f"closure of ({u.text()}) x d",
            passed=not missing,
            inputs={"r": r, "L_r u": top.text()},
            expected="(L_r u) x d^i for every i in the inner window",
            got={"missing_powers": missing} if missing else "contained",
        )
    return report
