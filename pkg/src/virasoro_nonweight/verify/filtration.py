"""
The L₋₁-degree filtration of 𝓜(V, 1, Ω(λ,α)).

V^{(n)} = Σ_{i≤n} L₋₁ⁱ V_𝔅 ⊗ ℂ[∂] is stable under every L_m when μ = 1,
and each quotient V^{(n)}/V^{(n-1)} is compared with F-modules on V_𝔅.
"""

from __future__ import annotations

import logging
from typing import Any

from virasoro_nonweight.algebra.hmod import BModuleSpec
from virasoro_nonweight.algebra.omega import OmegaParams
from virasoro_nonweight.algebra.poly import Poly, j_basis
from virasoro_nonweight.algebra.scalar import (
    ONE,
    GaussianRational,
    Number,
    as_scalar,
    format_scalar,
)
from virasoro_nonweight.algebra.tensor import (
    FModuleView,
    TensorElement,
    TensorModule,
    TensorParams,
    f_action,
)
from virasoro_nonweight.models import TruncationWindow, VerifyReport
from virasoro_nonweight.verify.context import SuiteContext
from virasoro_nonweight.verify.span import SpanBasis

logger = logging.getLogger(__name__)

SHIFT_FACTORS = (-1, 0, 1)


def _slice_basis(spec: BModuleSpec, n: int, deg: int) -> SpanBasis[tuple[int, int, int]]:
    basis: SpanBasis[tuple[int, int, int]] = SpanBasis()
    for k, s in spec.basis_keys(n):
        for j in range(deg + 1):
            basis.add(TensorElement.monomial(k, s, j))
    return basis


def _with_poly(k: int, s: int, g: Poly) -> TensorElement:
    return TensorElement({(k, s, j): c for j, c in enumerate(g.coeffs)})


def _shift_components(x: TensorElement, by: int) -> TensorElement:
    """Φ_c on F-elements: e ⊗ g(∂) ↦ e ⊗ g(∂ + by)."""
    out = TensorElement.zero()
    for s in sorted({s for _, s, _ in x.coords}):
        out = out + _with_poly(0, s, x.component(0, s).shift(-by))
    return out


def _quotient_part(x: TensorElement, n: int) -> TensorElement:
    """The class of x modulo V^{(n-1)}, read on the representatives L₋₁ⁿ e ⊗ g ↦ e ⊗ g."""
    return TensorElement({(0, s, j): c for (k, s, j), c in x.coords.items() if k == n})


def check_filtration(
    lam: Number | str,
    alpha: Number | str,
    spec: BModuleSpec,
    p_max: int,
    window: TruncationWindow,
) -> VerifyReport:
    """
    Closure of each V^{(n)}, n ≤ p_max, and the quotient intertwiner search (μ = 1).

    Closure: every L_m image of a window monomial of V^{(n)} must lie in the
    span of the V^{(n)} monomials of degree ≤ n_max + 1.

    Quotient: for n ≥ 1 the action on representatives L₋₁ⁿ e_s ⊗ J_0^k is
    compared with F(V_𝔅, Ω(λ, α')) composed with Φ_c(e ⊗ g) = e ⊗ g(∂ + cn),
    for α' ∈ {α, α + n} and c ∈ {-1, 0, 1}. Every matching candidate is recorded.
    """
    params = TensorParams.of(1, lam, alpha)
    module = TensorModule(params, spec)
    report = VerifyReport(
        suite="filtration",
        params={**params.echo(), "vb": spec.echo(), "p_max": p_max, "window": window.model_dump()},
    )
    for n in range(p_max + 1):
        members = _slice_basis(spec, n, window.n_max + 1)
        witness = None
        for k, s in spec.basis_keys(n):
            for j in range(window.n_max + 1):
                b = TensorElement.monomial(k, s, j)
                for m in window.m_values:
                    image = module.act(m, b)
                    if not members.contains(image):
                        witness = (m, b, image)
                        break
                if witness:
                    break
            if witness:
                break
        report.add_case(
            f"V^({n}) closed",
            passed=witness is None,
            inputs={"n": n, "m_range": [window.m_lo, window.m_hi]},
            got="closed" if witness is None else f"L_{witness[0]} image {witness[2].text()}",
            witness=None if witness is None else witness[1].to_json(),
        )

    if not spec.induced:
        report.add_case(
            "quotient intertwiner search",
            passed=True,
            note="not applicable: the trivial module has V^(n) = V^(0) for every n",
        )
        return report

    alpha_s = as_scalar(alpha)
    for n in range(1, p_max + 1):
        candidates: list[dict[str, Any]] = []
        for shift_alpha in (0, n):
            view = FModuleView(OmegaParams(as_scalar(lam), alpha_s + shift_alpha), spec)
            for c in SHIFT_FACTORS:
                ok = _candidate_intertwines(module, view, spec, n, c * n, window)
                candidates.append(
                    {"alpha": format_scalar(alpha_s + shift_alpha), "c": c, "intertwines": ok}
                )
        matches = [cand for cand in candidates if cand["intertwines"]]
        report.add_case(
            f"V^({n})/V^({n - 1}) intertwiner search",
            passed=bool(candidates),
            inputs={"n": n},
            expected="every candidate evaluated",
            got={"matches": len(matches), "candidates": candidates},
            note=f"{len(matches)} of {len(candidates)} candidates intertwine",
        )
    logger.info(f"filtration: {len(report.cases)} cases, pass={report.passed}")
    return report


def _candidate_intertwines(
    module: TensorModule,
    view: FModuleView,
    spec: BModuleSpec,
    n: int,
    shift: int,
    window: TruncationWindow,
) -> bool:
    for s in range(spec.dim):
        for k in range(window.n_max + 1):
            g = j_basis(0, k)
            rep = _with_poly(0, s, g)
            source = _with_poly(n, s, g)
            for m in window.m_values:
                y = module.act(m, source)
                lhs = _shift_components(_quotient_part(y, n), shift)
                rhs = f_action(view, m, _shift_components(rep, shift))
                if lhs != rhs:
                    return False
    return True


def negative_control(
    params: TensorParams, spec: BModuleSpec, window: TruncationWindow
) -> tuple[bool, dict[str, Any]]:
    """
    With μ ≠ 1, V^{(0)} is not stable: L_m(e_s ⊗ 1) has coefficient λ^m(μ^m - 1) at L₋₁ e_s ⊗ 1.

    Returns whether the failure was observed with exactly that coefficient.
    """
    details: dict[str, Any] = {}
    module = TensorModule(params, spec)
    for m in window.m_values:
        if m == 0:
            continue
        image = module.act(m, TensorElement.monomial(0, 0, 0))
        coeff = image.coefficient((1, 0, 0))
        expected: GaussianRational = params.lam**m * (params.mu**m - ONE)
        if coeff and coeff == expected:
            details = {"m": m, "coefficient": format_scalar(coeff), "witness": image}
            return True, details
    return False, details


def filtration_suite(ctx: SuiteContext) -> VerifyReport:
    report = check_filtration(ctx.params.lam, ctx.params.alpha, ctx.spec, ctx.p_max, ctx.window)
    if not ctx.spec.induced:
        report.add_case(
            "mu != 1 breaks V^(0)",
            passed=True,
            note="not applicable: the twist vanishes on the trivial module",
        )
        return report
    mu = ctx.params.mu if ctx.params.mu != 1 else as_scalar(2)
    ok, details = negative_control(TensorParams(mu, ctx.params.omega), ctx.spec, ctx.window)
    witness = details.pop("witness", None)
    report.add_case(
        "mu != 1 breaks V^(0)",
        passed=ok,
        inputs={"mu": format_scalar(mu)},
        expected="L-1 e_0 coefficient lambda^m (mu^m - 1)",
        got=details or "V^(0) closed",
        witness=witness.to_json() if witness is not None else None,
    )
    return report
