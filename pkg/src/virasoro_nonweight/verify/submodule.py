"""
The submodule of 𝓜(V, μ, Ω(λ,0)) spanned by L₋₁v ⊗ g - v ⊗ ∂g.

τ(v ⊗ g) = L₋₁v ⊗ g - v ⊗ ∂g maps 𝓜(V, μ, Ω(λ,1)) onto it, and
π(L₋₁ʲ e ⊗ g) = e ⊗ ∂ʲ g identifies the quotient with F(V_𝔅, Ω(λμ, 0)).
Both maps are homogeneous for the total degree k + n.
"""

from __future__ import annotations

import logging
from typing import Any

from virasoro_nonweight.algebra.hmod import BModuleSpec
from virasoro_nonweight.algebra.omega import OmegaParams
from virasoro_nonweight.algebra.poly import j_basis
from virasoro_nonweight.algebra.scalar import ONE, GaussianRational, Number, as_scalar
from virasoro_nonweight.algebra.sparse import accumulate
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

Key = tuple[int, int, int]


def tau(x: TensorElement, spec: BModuleSpec) -> TensorElement:
    """τ(L₋₁ʲ e_s ⊗ ∂ⁿ) = L₋₁ʲ⁺¹ e_s ⊗ ∂ⁿ - L₋₁ʲ e_s ⊗ ∂ⁿ⁺¹, extended linearly."""
    out: dict[Key, GaussianRational] = {}
    for (j, s, n), c in x.items():
        if spec.induced:
            accumulate(out, (j + 1, s, n), c)
        accumulate(out, (j, s, n + 1), -c)
    return TensorElement.from_clean(out)


def quotient_map(x: TensorElement) -> TensorElement:
    """π(L₋₁ʲ e_s ⊗ ∂ⁿ) = e_s ⊗ ∂ʲ⁺ⁿ; its kernel is the image of τ."""
    out: dict[Key, GaussianRational] = {}
    for (j, s, n), c in x.items():
        accumulate(out, (0, s, j + n), c)
    return TensorElement.from_clean(out)


def _j_element(j: int, s: int, k: int) -> TensorElement:
    """L₋₁ʲ e_s ⊗ J_0^k."""
    return TensorElement({(j, s, n): c for n, c in enumerate(j_basis(0, k).coeffs)})


def tau_image_basis(spec: BModuleSpec, total_degree: int) -> SpanBasis[Key]:
    """τ-images of all monomials of total degree ≤ total_degree."""
    basis: SpanBasis[Key] = SpanBasis()
    for j, s in spec.basis_keys(total_degree):
        for n in range(total_degree - j + 1):
            basis.add(tau(TensorElement.monomial(j, s, n), spec))
    return basis


def check_tau(
    lam: Number | str, mu: Number | str, spec: BModuleSpec, window: TruncationWindow
) -> VerifyReport:
    """
    Closure of the τ-image, τ intertwining 𝓜(V,μ,Ω(λ,1)) → 𝓜(V,μ,Ω(λ,0)), and the quotient.

    τ is injective and homogeneous of degree +1 in k + n, and L_m raises k + n by
    at most one, so images of window elements are tested against the τ-image
    of everything of total degree ≤ k_max + n_max + 1.
    """
    lam_s, mu_s = as_scalar(lam), as_scalar(mu)
    source = TensorModule(TensorParams(mu_s, OmegaParams(lam_s, ONE)), spec)
    target = TensorModule(TensorParams(mu_s, OmegaParams(lam_s, as_scalar(0))), spec)
    report = VerifyReport(
        suite="tau",
        params={
            **target.params.echo(),
            "vb": spec.echo(),
            "window": window.model_dump(),
        },
    )
    keys = [(j, s, k) for j, s in spec.basis_keys(window.k_max) for k in range(window.n_max + 1)]

    image_span = tau_image_basis(spec, window.k_max + window.n_max + 1)
    closure_witness: tuple[int, TensorElement] | None = None
    for j, s, k in keys:
        t = tau(_j_element(j, s, k), spec)
        for m in window.m_values:
            if not image_span.contains(target.act(m, t)):
                closure_witness = (m, t)
                break
        if closure_witness:
            break
    report.add_case(
        "tau-image closed",
        passed=closure_witness is None,
        inputs={"rank": image_span.rank},
        got="closed" if closure_witness is None else f"L_{closure_witness[0]} leaves the image",
        witness=None if closure_witness is None else closure_witness[1].to_json(),
    )

    failures: list[dict[str, Any]] = []
    witness = None
    for j, s, k in keys:
        x = _j_element(j, s, k)
        tx = tau(x, spec)
        for m in window.m_values:
            lhs = tau(source.act(m, x), spec)
            rhs = target.act(m, tx)
            if lhs != rhs:
                failures.append({"m": m, "j": j, "s": s, "k": k})
                witness = witness or x
    report.add_case(
        "tau intertwines",
        passed=not failures,
        expected="tau(L_m x) == L_m tau(x)",
        got=failures[:5] or "all equal",
        witness=witness.to_json() if witness is not None else None,
    )

    if not spec.induced:
        report.add_case(
            "quotient matches F(V_B, Omega(lambda*mu, 0))",
            passed=True,
            note="not applicable: needs the induced module",
        )
    else:
        view = FModuleView(OmegaParams(lam_s * mu_s, as_scalar(0)), spec)
        failures = []
        witness = None
        for j, s, k in keys:
            x = _j_element(j, s, k)
            px = quotient_map(x)
            for m in window.m_values:
                if quotient_map(target.act(m, x)) != f_action(view, m, px):
                    failures.append({"m": m, "j": j, "s": s, "k": k})
                    witness = witness or x
        report.add_case(
            "quotient matches F(V_B, Omega(lambda*mu, 0))",
            passed=not failures,
            got=failures[:5] or "all equal",
            witness=witness.to_json() if witness is not None else None,
        )
    logger.info(f"tau: {len(report.cases)} cases, pass={report.passed}")
    return report


def tau_suite(ctx: SuiteContext) -> VerifyReport:
    return check_tau(ctx.params.lam, ctx.params.mu, ctx.spec, ctx.window)
