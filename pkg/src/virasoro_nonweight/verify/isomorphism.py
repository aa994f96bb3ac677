"""
Isomorphisms between tensor modules.

φ: 𝓜(V₁, μ, Ω(λ,α₁)) → 𝓜(V₂, μ⁻¹, Ω(μλ,α₂)) for highest-weight V₁, V₂ of weights -α₂, -α₁,
ψ: 𝓜(V, μ, Ω(λ,α)) → Ω(λ,α) ⊗ Ω(λμ,-β) for highest-weight V of weight β,
and the classifier deciding when two tensor modules are isomorphic.
"""

from __future__ import annotations

import logging
from typing import Any

from virasoro_nonweight.algebra.errors import ParameterError
from virasoro_nonweight.algebra.hmod import BModuleSpec
from virasoro_nonweight.algebra.omega import OmegaParams, PairElement, pair_action
from virasoro_nonweight.algebra.poly import Poly, j_basis, shifted_power
from virasoro_nonweight.algebra.scalar import (
    GaussianRational,
    Number,
    as_scalar,
    binomial,
    format_scalar,
)
from virasoro_nonweight.algebra.sparse import accumulate
from virasoro_nonweight.algebra.tensor import TensorElement, TensorModule, TensorParams
from virasoro_nonweight.models import IsoKind, IsoVerdict, TruncationWindow, VerifyReport
from virasoro_nonweight.verify.context import SuiteContext
from virasoro_nonweight.verify.span import rank_of

logger = logging.getLogger(__name__)

Key = tuple[int, int, int]


def _with_poly(k: int, g: Poly) -> TensorElement:
    return TensorElement({(k, 0, n): c for n, c in enumerate(g.coeffs)})


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ParameterError(message)


# --- φ ----------------------------------------------------------------------


def phi(x: TensorElement) -> TensorElement:
    """φ(L₋₁ⁱ v₁ ⊗ ∂ʲ) = Σ_p (-1)^p C(i,p) L₋₁ᵖ v₂ ⊗ ∂^{i-p+j}."""
    out: dict[Key, GaussianRational] = {}
    for (i, _, j), c in x.items():
        for p in range(i + 1):
            sign = 1 if p % 2 == 0 else -1
            accumulate(out, (p, 0, i - p + j), c * binomial(i, p) * sign)
    return TensorElement.from_clean(out)


def phi_modules(
    mu: Number | str, lam: Number | str, alpha1: Number | str, alpha2: Number | str
) -> tuple[TensorModule, TensorModule]:
    """Source 𝓜(V₁, μ, Ω(λ,α₁)) and target 𝓜(V₂, μ⁻¹, Ω(μλ,α₂)) with V₁, V₂ of weights -α₂, -α₁."""
    mu_s, lam_s = as_scalar(mu), as_scalar(lam)
    a1, a2 = as_scalar(alpha1), as_scalar(alpha2)
    _require(bool(mu_s) and mu_s != 1, "phi needs mu not in {0, 1}")
    _require(bool(lam_s), "phi needs lambda != 0")
    _require(bool(a1) and bool(a2), "phi needs alpha1, alpha2 != 0")
    source = TensorModule(
        TensorParams(mu_s, OmegaParams(lam_s, a1)), BModuleSpec.highest_weight(-a2)
    )
    target = TensorModule(
        TensorParams(mu_s.inverse(), OmegaParams(mu_s * lam_s, a2)),
        BModuleSpec.highest_weight(-a1),
    )
    return source, target


def _l_minus_shift_power(p: int, n: int) -> TensorElement:
    """(L₋₁ - n)ᵖ v₂ as an element with ∂-degree 0."""
    return TensorElement(
        {(q, 0, 0): binomial(p, q) * as_scalar(-n) ** (p - q) for q in range(p + 1)}
    )


def _tensor_poly(v: TensorElement, g: Poly) -> TensorElement:
    """(Σ c_q L₋₁^q v) ⊗ g for v given with ∂-degree 0."""
    out: dict[Key, GaussianRational] = {}
    for (q, s, _), c in v.items():
        for n, a in enumerate(g.coeffs):
            if a:
                accumulate(out, (q, s, n), c * a)
    return TensorElement.from_clean(out)


def check_phi(
    mu: Number | str,
    lam: Number | str,
    alpha1: Number | str,
    alpha2: Number | str,
    window: TruncationWindow,
) -> VerifyReport:
    """
    φ intertwines, is bijective on the window, and satisfies the shifted expansion
    φ(L₋₁ⁱ v₁ ⊗ J_n^k) = Σ_p (-1)^p C(i,p) (L₋₁-n)^p v₂ ⊗ (∂-n)^{i-p} J_n^k.
    """
    source, target = phi_modules(mu, lam, alpha1, alpha2)
    report = VerifyReport(
        suite="phi",
        params={
            "mu": format_scalar(as_scalar(mu)),
            "lambda": format_scalar(as_scalar(lam)),
            "alpha1": format_scalar(as_scalar(alpha1)),
            "alpha2": format_scalar(as_scalar(alpha2)),
            "window": window.model_dump(),
        },
    )
    for m in window.m_values:
        failure: dict[str, Any] | None = None
        witness = None
        for i in range(window.k_max + 1):
            for k in range(window.n_max + 1):
                x = _with_poly(i, j_basis(0, k))
                if phi(source.act(m, x)) != target.act(m, phi(x)):
                    failure = {"i": i, "k": k}
                    witness = x
                    break
            if failure:
                break
        report.add_case(
            f"phi intertwines L_{m}",
            passed=failure is None,
            inputs={"m": m},
            got=failure or "equal",
            witness=witness.to_json() if witness is not None else None,
        )

    # φ preserves k + n and is triangular in k with diagonal (-1)^i
    ranks: dict[int, int] = {}
    diagonal_ok = True
    for total in range(window.k_max + 1):
        images = []
        for i in range(total + 1):
            image = phi(TensorElement.monomial(i, 0, total - i))
            images.append(image)
            diagonal_ok &= image.coefficient((i, 0, total - i)) == (-1) ** i
        ranks[total] = rank_of(images)
    report.add_case(
        "phi bijective on the window",
        passed=diagonal_ok and all(ranks[t] == t + 1 for t in ranks),
        expected="full rank in every total degree",
        got={str(t): r for t, r in ranks.items()},
    )

    shifted_ok = True
    for n in window.m_values:
        for i in range(window.k_max + 1):
            for k in range(min(window.n_max, 3) + 1):
                g = j_basis(n, k)
                lhs = phi(_with_poly(i, g))
                rhs = TensorElement.zero()
                for p in range(i + 1):
                    coeff = binomial(i, p) * (1 if p % 2 == 0 else -1)
                    term = _tensor_poly(_l_minus_shift_power(p, n), shifted_power(n, i - p) * g)
                    rhs = rhs + term.scale(coeff)
                shifted_ok &= lhs == rhs
    report.add_case("phi shifted expansion over J_n^k", passed=shifted_ok)
    logger.info(f"phi: {len(report.cases)} cases, pass={report.passed}")
    return report


def phi_suite(ctx: SuiteContext) -> VerifyReport:
    """φ for (μ, λ, α) with α₁ = α and α₂ = -β (so V₁ is the configured highest-weight module)."""
    beta = ctx.spec.beta
    _require(ctx.spec.is_highest_weight and beta is not None, "phi needs a highest-weight V")
    return check_phi(ctx.params.mu, ctx.params.lam, ctx.params.alpha, -beta, ctx.window)


# --- classification ---------------------------------------------------------


def _validate_point(label: str, p: TensorParams, spec: BModuleSpec) -> None:
    _require(p.mu != 1, f"{label}: mu must not be 1")
    _require(bool(p.alpha), f"{label}: alpha must be nonzero")
    _require(spec.induced, f"{label}: the trivial module is not in the category")


def classify_iso(
    p1: TensorParams, spec1: BModuleSpec, p2: TensorParams, spec2: BModuleSpec
) -> IsoVerdict:
    """
    Decide whether 𝓜(V₁,μ₁,Ω(λ₁,α₁)) ≅ 𝓜(V₂,μ₂,Ω(λ₂,α₂)).

    (a) equal triples and V₁ ≅ V₂; (b) μ₁ = μ₂⁻¹ = λ₂/λ₁ with V₁, V₂ highest
    weight of weights -α₂, -α₁. Isomorphism of V_𝔅 is decided only in
    dimension one, so larger matrix specs give Unknown.
    """
    _validate_point("first", p1, spec1)
    _validate_point("second", p2, spec2)
    conditions: dict[str, Any] = {"first": p1.echo(), "second": p2.echo()}
    if spec1.dim > 1 or spec2.dim > 1:
        return IsoVerdict(
            kind=IsoKind.UNKNOWN,
            conditions=conditions,
            reason="isomorphism of V_B is not decided for dimension > 1",
        )
    b1, b2 = spec1.beta, spec2.beta
    assert b1 is not None and b2 is not None  # dimension one forces order 0
    conditions["beta1"], conditions["beta2"] = format_scalar(b1), format_scalar(b2)

    same_triple = (p1.mu, p1.lam, p1.alpha) == (p2.mu, p2.lam, p2.alpha)
    case_a = same_triple and b1 == b2
    case_b = (
        p1.mu == p2.mu.inverse()
        and p1.mu == p2.lam / p1.lam
        and b1 == -p2.alpha
        and b2 == -p1.alpha
    )
    conditions["case_a"], conditions["case_b"] = case_a, case_b
    if case_a:
        return IsoVerdict(
            kind=IsoKind.CASE_A,
            conditions=conditions,
            reason="equal (mu, lambda, alpha) and equal highest weights",
        )
    if case_b:
        return IsoVerdict(
            kind=IsoKind.CASE_B,
            conditions=conditions,
            reason="mu1 = 1/mu2 = lambda2/lambda1, weights -alpha2 and -alpha1",
        )
    return IsoVerdict(
        kind=IsoKind.NOT_ISOMORPHIC,
        conditions=conditions,
        reason="neither equal data nor the inverted-mu pairing",
    )


def classify_suite(ctx: SuiteContext) -> VerifyReport:
    """Classifier cases derived from the configured point: itself, its partner, a perturbation."""
    p, spec = ctx.params, ctx.spec
    report = VerifyReport(suite="classify", params={**p.echo(), "vb": spec.echo()})
    undecided = spec.dim > 1
    same = IsoKind.UNKNOWN if undecided else IsoKind.CASE_A
    different = IsoKind.UNKNOWN if undecided else IsoKind.NOT_ISOMORPHIC
    perturbed = TensorParams(p.mu, OmegaParams(p.lam, p.alpha + 1))
    cases: list[tuple[str, TensorParams, BModuleSpec, IsoKind]] = [
        ("identical data", p, spec, same),
        ("alpha perturbed", perturbed, spec, different),
    ]
    if spec.is_highest_weight and spec.beta is not None and spec.beta:
        partner = TensorParams(p.mu.inverse(), OmegaParams(p.mu * p.lam, -spec.beta))
        cases.append(
            ("inverted-mu partner", partner, BModuleSpec.highest_weight(-p.alpha), IsoKind.CASE_B)
        )
    for name, q, other, expected in cases:
        if q.alpha == 0:
            continue
        forward = classify_iso(p, spec, q, other)
        backward = classify_iso(q, other, p, spec)
        report.add_case(
            name,
            passed=forward.kind == expected and backward.kind == expected,
            inputs={"other": {**q.echo(), "vb": other.echo()}},
            expected=expected.value,
            got=[forward.kind.value, backward.kind.value],
            note=forward.reason,
        )
    return report


# --- ψ ----------------------------------------------------------------------


def psi(x: TensorElement) -> PairElement:
    """ψ(L₋₁ⁱ v ⊗ ∂ʲ) = Σ_p C(j,p) ∂^{j-p} ⊗ ∂^{i+p}."""
    out: dict[tuple[int, int], GaussianRational] = {}
    for (i, _, j), c in x.items():
        for p in range(j + 1):
            accumulate(out, (j - p, i + p), c * binomial(j, p))
    return PairElement.from_clean(out)


def _psi_intertwining(
    source: TensorModule,
    first: OmegaParams,
    second: OmegaParams,
    window: TruncationWindow,
) -> tuple[dict[int, bool], TensorElement | None]:
    results: dict[int, bool] = {}
    witness = None
    for m in window.m_values:
        ok = True
        for i in range(window.k_max + 1):
            for j in range(window.n_max + 1):
                x = TensorElement.monomial(i, 0, j)
                if psi(source.act(m, x)) != pair_action(first, second, m, psi(x)):
                    ok = False
                    witness = witness or x
        results[m] = ok
    return results, witness


def check_psi(
    mu: Number | str,
    alpha: Number | str,
    beta: Number | str,
    window: TruncationWindow,
    *,
    lam: Number | str = 1,
) -> VerifyReport:
    """
    ψ: 𝓜(V, μ, Ω(λ,α)) → Ω(λ,α) ⊗ Ω(λμ,-β) with V of highest weight β.

    Also runs the negative control with the second factor Ω(λμ, -(β+1)),
    which must fail to intertwine.
    """
    mu_s, a, b, lam_s = as_scalar(mu), as_scalar(alpha), as_scalar(beta), as_scalar(lam)
    source = TensorModule(TensorParams(mu_s, OmegaParams(lam_s, a)), BModuleSpec.highest_weight(b))
    first = OmegaParams(lam_s, a)
    report = VerifyReport(
        suite="psi",
        params={
            "mu": format_scalar(mu_s),
            "lambda": format_scalar(lam_s),
            "alpha": format_scalar(a),
            "beta": format_scalar(b),
            "window": window.model_dump(),
        },
    )
    results, witness = _psi_intertwining(source, first, OmegaParams(lam_s * mu_s, -b), window)
    for m, ok in results.items():
        report.add_case(
            f"psi intertwines L_{m}",
            passed=ok,
            inputs={"m": m},
            witness=witness.to_json() if (witness is not None and not ok) else None,
        )

    ranks: dict[int, int] = {}
    for total in range(window.k_max + window.n_max + 1):
        pairs = [(i, total - i) for i in range(window.k_max + 1) if 0 <= total - i <= window.n_max]
        ranks[total] = rank_of(psi(TensorElement.monomial(i, 0, j)) for i, j in pairs)
        ranks[total] -= len(pairs)
    report.add_case(
        "psi injective on the window",
        passed=all(deficit == 0 for deficit in ranks.values()),
        expected="full rank in every total degree",
        got={str(t): d for t, d in ranks.items() if d},
    )

    wrong, wrong_witness = _psi_intertwining(
        source, first, OmegaParams(lam_s * mu_s, -(b + 1)), window
    )
    failed_at = [m for m, ok in wrong.items() if not ok]
    report.add_case(
        "wrong weight breaks psi",
        passed=bool(failed_at),
        inputs={"target_weight": format_scalar(b + 1)},
        expected="intertwining fails",
        got={"failing_m": failed_at},
        witness=wrong_witness.to_json() if wrong_witness is not None else None,
    )
    logger.info(f"psi: {len(report.cases)} cases, pass={report.passed}")
    return report


def psi_suite(ctx: SuiteContext) -> VerifyReport:
    beta = ctx.spec.beta
    _require(ctx.spec.is_highest_weight and beta is not None, "psi needs a highest-weight V")
    return check_psi(ctx.params.mu, ctx.params.alpha, beta, ctx.window, lam=ctx.params.lam)
