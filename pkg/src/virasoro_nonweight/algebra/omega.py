"""
The non-weight module Ω(λ,α) = ℂ[∂] and tensor products of two such modules.

    L_m f(∂) = λ^m (∂ - mα) f(∂ - m),    C f(∂) = 0.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from virasoro_nonweight.algebra.errors import ParameterError
from virasoro_nonweight.algebra.poly import Poly
from virasoro_nonweight.algebra.scalar import GaussianRational, Number, as_scalar, format_scalar
from virasoro_nonweight.algebra.sparse import SparseVector, accumulate
from virasoro_nonweight.models import VerifyReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class OmegaParams:
    """Parameters (λ, α) of Ω(λ,α); λ must be nonzero."""

    lam: GaussianRational
    alpha: GaussianRational

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", as_scalar(self.lam))
        object.__setattr__(self, "alpha", as_scalar(self.alpha))
        if not self.lam:
            raise ParameterError("lambda must be nonzero")

    @classmethod
    def of(cls, lam: Number | str, alpha: Number | str) -> OmegaParams:
        return cls(as_scalar(lam), as_scalar(alpha))

    def echo(self) -> dict[str, str]:
        return {"lambda": format_scalar(self.lam), "alpha": format_scalar(self.alpha)}


def omega_action(p: OmegaParams, m: int, f: Poly) -> Poly:
    """L_m f = λ^m (∂ - mα) f(∂ - m)."""
    shifted = f.shift(m)
    return (shifted.times_d() - shifted.scale(p.alpha * m)).scale(p.lam**m)


def omega_central(f: Poly) -> Poly:
    """C acts as zero."""
    return Poly.zero()


def shift_scale(p: OmegaParams, m: int, f: Poly) -> Poly:
    """The operator x_m: f ↦ λ^m f(∂ - m)."""
    return f.shift(m).scale(p.lam**m)


def alpha_zero_submodule_check(
    p: OmegaParams, m_values: list[int], deg_bound: int
) -> VerifyReport:
    """
    Check that ∂·ℂ[∂] is stable under every L_m when α = 0.

    Each basis vector ∂·∂^g (g ≤ deg_bound) is acted on by every L_m in
    m_values and the image must have zero constant term.
    """
    if p.alpha:
        raise ParameterError("the ∂·ℂ[∂] witness needs alpha = 0")
    report = VerifyReport(suite="omega-alpha0", params=p.echo())
    for m in m_values:
        bad: list[int] = []
        for g in range(deg_bound + 1):
            image = omega_action(p, m, Poly.monomial(g + 1))
            if image.coeff(0):
                bad.append(g)
        report.add_case(
            f"L_{m} keeps d*C[d]",
            passed=not bad,
            inputs={"m": m, "deg_bound": deg_bound},
            expected="constant term 0",
            got="constant term 0" if not bad else f"nonzero constant term for d^{bad[0] + 1}",
        )
    # Stronger form: L_m f is divisible by ∂ for every f, since λ^m·∂·f(∂-m).
    for m in m_values:
        ok = all(
            not omega_action(p, m, Poly.monomial(g)).coeff(0) for g in range(deg_bound + 1)
        )
        report.add_case(f"L_{m} image divisible by d", passed=ok, inputs={"m": m})
    logger.info(f"omega-alpha0: {len(report.cases)} cases, pass={report.passed}")
    return report


class PairElement(SparseVector[tuple[int, int]]):
    """Element of Ω(λ₁,α₁) ⊗ Ω(λ₂,α₂) in the monomial basis ∂^a ⊗ ∂^b, keyed by (a, b)."""


def _omega_monomial(p: OmegaParams, m: int, a: int) -> Poly:
    return omega_action(p, m, Poly.monomial(a))


def pair_action(first: OmegaParams, second: OmegaParams, m: int, x: PairElement) -> PairElement:
    """L_m(f ⊗ g) = L_m f ⊗ g + f ⊗ L_m g."""
    out: dict[tuple[int, int], GaussianRational] = {}
    for (a, b), c in x.items():
        for i, q in enumerate(_omega_monomial(first, m, a).coeffs):
            if q:
                accumulate(out, (i, b), c * q)
        for j, q in enumerate(_omega_monomial(second, m, b).coeffs):
            if q:
                accumulate(out, (a, j), c * q)
    return PairElement.from_clean(out)
