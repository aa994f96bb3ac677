"""The Virasoro bracket law on 𝓜(V, μ, Ω(λ,α))."""

from __future__ import annotations

import logging
from fractions import Fraction
from math import lcm

from virasoro_nonweight.algebra.hmod import BModuleSpec
from virasoro_nonweight.algebra.scalar import GaussianRational
from virasoro_nonweight.algebra.tensor import TensorElement, TensorModule, TensorParams
from virasoro_nonweight.models import TruncationWindow, VerifyReport
from virasoro_nonweight.verify.context import SuiteContext
from virasoro_nonweight.verify.sampling import sample_elements, window_keys

logger = logging.getLogger(__name__)

Key = tuple[int, int, int]
GaussInt = tuple[int, int]


def _central_term(module: TensorModule, m: int, n: int, x: TensorElement) -> TensorElement:
    """δ_{m+n,0}·(m³-m)/12·C x."""
    if m + n != 0:
        return TensorElement.zero()
    return module.central(x).scale(Fraction(m**3 - m, 12))


class ScaledImages:
    """
    L_m on a fixed set of basis monomials, every image multiplied by one common
    denominator so that all coefficients are Gaussian integers.
    """

    def __init__(self, module: TensorModule, m: int, keys: set[Key]) -> None:
        raw = {key: module.basis_image(m, *key) for key in keys}
        denom = 1
        for image in raw.values():
            for c in image.values():
                denom = lcm(denom, c.re.denominator, c.im.denominator)
        self.denom = denom
        self.images: dict[Key, dict[Key, GaussInt]] = {
            key: {
                out: (
                    c.re.numerator * (denom // c.re.denominator),
                    c.im.numerator * (denom // c.im.denominator),
                )
                for out, c in image.items()
            }
            for key, image in raw.items()
        }


def _add_composite(
    re: dict[Key, int],
    im: dict[Key, int],
    outer: ScaledImages,
    inner: dict[Key, GaussInt],
    sign: int,
) -> None:
    """re + i·im += sign · (outer applied to inner), all in integers."""
    for key, (a, b) in inner.items():
        for out, (c, d) in outer.images[key].items():
            re[out] = re.get(out, 0) + sign * (a * c - b * d)
            im[out] = im.get(out, 0) + sign * (a * d + b * c)


def _commutator(first: ScaledImages, second: ScaledImages, key: Key) -> TensorElement:
    """(L_m L_n - L_n L_m) on one basis monomial, with first for L_m and second for L_n."""
    re: dict[Key, int] = {}
    im: dict[Key, int] = {}
    _add_composite(re, im, first, second.images[key], 1)
    _add_composite(re, im, second, first.images[key], -1)
    denom = first.denom * second.denom
    return TensorElement.from_clean(
        {
            out: GaussianRational(Fraction(a, denom), Fraction(im[out], denom))
            for out, a in re.items()
            if a or im[out]
        }
    )


def check_bracket(
    p: TensorParams,
    spec: BModuleSpec,
    window: TruncationWindow,
    samples: int,
    rng_seed: int,
    *,
    drop_correction: bool = False,
) -> VerifyReport:
    """
    Check (L_m L_n - L_n L_m) x = (n-m) L_{m+n} x + δ_{m+n,0}(m³-m)/12·C x.

    Both sides are linear in x, so the defect is computed once per window
    basis monomial and every m < n (the case n < m is the same identity
    negated). The composites L_m L_n run in Gaussian integers over images
    scaled by a common denominator per m; only the results go back to ℚ(i).
    The seeded random samples are then evaluated from those defects; a
    sample with nonzero defect becomes the case witness.
    """
    module = TensorModule(p, spec, drop_correction=drop_correction)
    keys = window_keys(spec, window)
    ms = window.m_values
    reach = set(keys)
    for m in ms:
        for key in keys:
            reach.update(module.basis_image(m, *key))
    scaled = {m: ScaledImages(module, m, reach) for m in ms}
    xs = sample_elements(rng_seed, spec, window, samples)
    report = VerifyReport(
        suite="bracket",
        params={
            **p.echo(),
            "vb": spec.echo(),
            "window": window.model_dump(),
            "samples": samples,
            "seed": rng_seed,
            "corrupted": drop_correction,
        },
    )
    report.add_case("m = n", passed=True, note="both sides vanish identically")
    for i, m in enumerate(ms):
        for n in ms[i + 1 :]:
            defects: dict[Key, TensorElement] = {}
            for key in keys:
                b = TensorElement.monomial(*key)
                lhs = _commutator(scaled[m], scaled[n], key)
                rhs = module.act(m + n, b).scale(n - m) + _central_term(module, m, n, b)
                if defect := lhs - rhs:
                    defects[key] = defect
            witness: tuple[TensorElement, TensorElement] | None = None
            for x in xs:
                d = TensorElement.linear_combination(
                    (c, defects[key]) for key, c in x.items() if key in defects
                )
                if d:
                    witness = (x, d)
                    break
            if witness is None and defects:
                key = next(iter(defects))
                witness = (TensorElement.monomial(*key), defects[key])
            report.add_case(
                f"[L_{m}, L_{n}]",
                passed=witness is None,
                inputs={"m": m, "n": n},
                expected="0",
                got="0" if witness is None else witness[1].text(),
                witness=None if witness is None else witness[0].to_json(),
            )
    if failure := report.first_failure():
        report.witness = failure.witness
        logger.debug(f"bracket defect at {failure.name}: {failure.got}")
    logger.info(
        f"bracket: {len(report.cases)} cases over {len(keys)} basis monomials "
        f"and {samples} samples, pass={report.passed}"
    )
    return report


def bracket_suite(ctx: SuiteContext) -> VerifyReport:
    """Bracket law plus the corrupted-action negative control."""
    report = check_bracket(ctx.params, ctx.spec, ctx.window, ctx.samples, ctx.seed)
    if not ctx.spec.induced:
        report.add_case(
            "corrupted action is rejected",
            passed=True,
            note="not applicable: L-1 acts as zero on the trivial module",
        )
        return report
    small = TruncationWindow(
        k_max=min(ctx.window.k_max, 1),
        n_max=min(ctx.window.n_max, 1),
        m_lo=ctx.window.m_lo,
        m_hi=ctx.window.m_hi,
    )
    control = check_bracket(
        ctx.params, ctx.spec, small, min(ctx.samples, 20), ctx.seed, drop_correction=True
    )
    failure = control.first_failure()
    report.add_case(
        "corrupted action is rejected",
        passed=failure is not None,
        expected="bracket failure",
        got=f"failure at {failure.name}" if failure else "no failure",
        witness=failure.witness if failure else None,
        note="second summand without its -d/dt correction",
    )
    return report
