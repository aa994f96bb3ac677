"""Suites for the polynomial and induced-module identities the module action rests on."""

from __future__ import annotations

import logging
import random

from virasoro_nonweight.algebra.hmod import (
    BModuleSpec,
    InducedElement,
    check_exp_shift_identity,
    exp_shift_sides,
    order,
)
from virasoro_nonweight.algebra.omega import OmegaParams, alpha_zero_submodule_check, omega_action
from virasoro_nonweight.algebra.poly import D, Poly, j_basis
from virasoro_nonweight.algebra.scalar import ONE, ZERO, format_scalar
from virasoro_nonweight.algebra.tensor import (
    FModuleView,
    TensorElement,
    TensorModule,
    TensorParams,
    f_action,
)
from virasoro_nonweight.models import VerifyReport
from virasoro_nonweight.verify.context import SuiteContext
from virasoro_nonweight.verify.sampling import random_induced_element, random_poly

logger = logging.getLogger(__name__)

EQ_EXTRA_SHIFTS = range(-3, 4)
EQ_EXTRA_POWERS = 4
ORD_MAX_POWER = 6
RANDOM_ROUNDS = 5


def omega_basis_suite(ctx: SuiteContext) -> VerifyReport:
    """L_m J_n^k = λ^m(∂ - mα) J_{m+n}^k on the configured Ω and on Ω(-1/2, i)."""
    report = VerifyReport(suite="omega-basis", params=ctx.echo())
    ms = ctx.window.m_values
    for omega in (ctx.params.omega, OmegaParams.of("-1/2", "i")):
        lam, alpha = omega.lam, omega.alpha
        failures: list[dict[str, int]] = []
        for m in ms:
            factor = (D - Poly.constant(alpha * m)).scale(lam**m)
            for n in ms:
                for k in range(ctx.window.n_max + 1):
                    if omega_action(omega, m, j_basis(n, k)) != factor * j_basis(m + n, k):
                        failures.append({"m": m, "n": n, "k": k})
        report.add_case(
            f"L_m J_n^k on Omega({format_scalar(lam)}, {format_scalar(alpha)})",
            passed=not failures,
            inputs=omega.echo(),
            got=failures[:5] or "all equal",
        )
    logger.info(f"omega-basis: {len(report.cases)} cases, pass={report.passed}")
    return report


def omega_alpha0_suite(ctx: SuiteContext) -> VerifyReport:
    """∂ℂ[∂] ⊂ Ω(λ, 0) is a submodule; a nonzero configured α destroys it."""
    lam = ctx.params.lam
    report = alpha_zero_submodule_check(
        OmegaParams(lam, ZERO), ctx.window.m_values, ctx.window.n_max
    )
    alpha = ctx.params.alpha
    if alpha:
        # L_m ∂ = λ^m (∂ - mα)(∂ - m) has constant term λ^m m² α
        moved = [
            m
            for m in ctx.window.m_values
            if m and omega_action(ctx.params.omega, m, D).coeff(0) == lam**m * alpha * m * m
        ]
        report.add_case(
            "alpha != 0 leaves d*C[d]",
            passed=bool(moved),
            inputs={"alpha": format_scalar(alpha)},
            expected="constant term lambda^m m^2 alpha",
            got={"m": moved},
        )
    return report


def eq_extra_suite(ctx: SuiteContext) -> VerifyReport:
    """(e^{kt}·d/dt) L₋₁ⁱ = (L₋₁ - k)ⁱ e^{kt}·d/dt on basis vectors and seeded random elements."""
    spec = ctx.spec
    report = VerifyReport(suite="eq-extra", params={"vb": spec.echo(), "seed": ctx.seed})
    if not spec.induced:
        report.add_case(
            "exp-shift identity",
            passed=True,
            note="not applicable: L-1 acts as zero on the trivial module",
        )
        return report
    rng = random.Random(ctx.seed)
    xs = [InducedElement.vector(s) for s in range(spec.dim)]
    xs += [random_induced_element(rng, spec, 2) for _ in range(RANDOM_ROUNDS)]
    for k in EQ_EXTRA_SHIFTS:
        witness = None
        for i in range(EQ_EXTRA_POWERS + 1):
            for x in xs:
                if not check_exp_shift_identity(spec, k, i, x):
                    lhs, rhs = exp_shift_sides(spec, k, i, x)
                    witness = {"i": i, "x": x.text(), "lhs": lhs.text(), "rhs": rhs.text()}
                    break
            if witness:
                break
        report.add_case(
            f"exp-shift identity, k = {k}",
            passed=witness is None,
            inputs={"k": k, "i_max": EQ_EXTRA_POWERS, "elements": len(xs)},
            got=witness or "equal",
        )
    logger.info(f"eq-extra: {len(report.cases)} cases, pass={report.passed}")
    return report


def ord_suite(ctx: SuiteContext) -> VerifyReport:
    """
    ord(f(L₋₁) e_s) = deg f + r when M_r is invertible, over monomials and
    seeded random f; otherwise the annihilated flag on vectors killed by 𝔅.
    """
    spec = ctx.spec
    report = VerifyReport(suite="ord", params={"vb": spec.echo(), "seed": ctx.seed})
    if spec.is_trivial:
        flags = [order(spec, InducedElement.vector(s)) for s in range(spec.dim)]
        report.add_case(
            "vectors killed by B carry the flag",
            passed=all(o.value == 0 and o.annihilated_by_b for o in flags),
            got=[{"value": o.value, "annihilated_by_b": o.annihilated_by_b} for o in flags],
        )
        return report
    if not spec.top_acts_bijectively():
        report.add_case(
            "ord additivity",
            passed=True,
            note=f"not applicable: M_{spec.order} is not invertible",
        )
        return report

    r = spec.order
    bad: list[dict[str, int]] = []
    for s in range(spec.dim):
        for k in range(ORD_MAX_POWER + 1):
            got = order(spec, InducedElement.vector(s, k))
            if got.value != k + r or got.annihilated_by_b:
                bad.append({"s": s, "k": k, "ord": got.value})
    report.add_case(
        "ord(L-1^k e_s) = k + r",
        passed=not bad,
        inputs={"r": r, "k_max": ORD_MAX_POWER},
        got=bad[:5] or "all equal",
    )

    rng = random.Random(ctx.seed)
    bad_poly: list[dict[str, object]] = []
    for s in range(spec.dim):
        for _ in range(RANDOM_ROUNDS):
            f = random_poly(rng, ORD_MAX_POWER)
            x = InducedElement({(k, s): c for k, c in enumerate(f.coeffs) if c})
            got = order(spec, x)
            if got.value != f.degree + r:
                bad_poly.append({"f": f.text(), "s": s, "ord": got.value})
    report.add_case(
        "ord(f(L-1) e_s) = deg f + r",
        passed=not bad_poly,
        inputs={"r": r, "rounds": RANDOM_ROUNDS},
        got=bad_poly[:5] or "all equal",
    )
    logger.info(f"ord: {len(report.cases)} cases, pass={report.passed}")
    return report


def collapse_suite(ctx: SuiteContext) -> VerifyReport:
    """
    Trivial V collapses 𝓜 to copies of Ω(λ,α); F(V_𝔅, Ω) is 𝓜 at μ = 1 restricted to k = 0.
    """
    p, spec = ctx.params, ctx.spec
    report = VerifyReport(suite="collapse", params=ctx.echo())
    trivial = TensorModule(p, spec if not spec.induced else BModuleSpec.trivial(spec.dim))
    mismatches: list[dict[str, int]] = []
    for s in range(trivial.spec.dim):
        for n in range(ctx.window.n_max + 1):
            x = TensorElement.monomial(0, s, n)
            for m in ctx.window.m_values:
                got = trivial.act(m, x)
                want = TensorElement.pure(
                    InducedElement.vector(s), omega_action(p.omega, m, Poly.monomial(n))
                )
                if got != want:
                    mismatches.append({"s": s, "n": n, "m": m})
    report.add_case(
        "trivial V acts as Omega(lambda, alpha)",
        passed=not mismatches,
        inputs={"dim": trivial.spec.dim},
        got=mismatches[:5] or "all equal",
    )

    view = FModuleView(p.omega, spec)
    at_one = TensorModule(TensorParams(ONE, p.omega), spec)
    differ: list[dict[str, int]] = []
    for x in view.basis(ctx.window.n_max):
        for m in ctx.window.m_values:
            fx = f_action(view, m, x)
            if fx.max_k() != 0 or fx != at_one.act(m, x):
                _, s, n = next(iter(x.coords))
                differ.append({"s": s, "n": n, "m": m})
    report.add_case(
        "F(V_B, Omega) equals the mu = 1 action on V_B",
        passed=not differ,
        got=differ[:5] or "all equal",
    )
    logger.info(f"collapse: {len(report.cases)} cases, pass={report.passed}")
    return report
