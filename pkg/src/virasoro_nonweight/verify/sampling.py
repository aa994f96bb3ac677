"""Seeded random elements with coefficients from a small exact pool."""

from __future__ import annotations

import random

from virasoro_nonweight.algebra.hmod import BModuleSpec, InducedElement
from virasoro_nonweight.algebra.poly import Poly
from virasoro_nonweight.algebra.scalar import I, ONE, ZERO, GaussianRational
from virasoro_nonweight.algebra.tensor import TensorElement
from virasoro_nonweight.models import TruncationWindow

HALF = ONE / 2
COEFF_POOL: tuple[GaussianRational, ...] = (ZERO, ONE, -ONE, HALF, -HALF, I, -I)
NONZERO_POOL = COEFF_POOL[1:]


def window_keys(spec: BModuleSpec, window: TruncationWindow) -> list[tuple[int, int, int]]:
    """Basis keys (k, s, n) of the window, in a fixed order."""
    return [
        (k, s, n) for k, s in spec.basis_keys(window.k_max) for n in range(window.n_max + 1)
    ]


def random_tensor_element(
    rng: random.Random, spec: BModuleSpec, window: TruncationWindow, max_terms: int = 3
) -> TensorElement:
    """A nonzero element supported on at most max_terms window monomials."""
    keys = window_keys(spec, window)
    picked = rng.sample(keys, rng.randint(1, min(max_terms, len(keys))))
    coords = {picked[0]: rng.choice(NONZERO_POOL)}
    for key in picked[1:]:
        coords[key] = rng.choice(COEFF_POOL)
    return TensorElement(coords)


def random_induced_element(
    rng: random.Random, spec: BModuleSpec, k_max: int, max_terms: int = 3
) -> InducedElement:
    keys = spec.basis_keys(k_max)
    picked = rng.sample(keys, rng.randint(1, min(max_terms, len(keys))))
    coords = {picked[0]: rng.choice(NONZERO_POOL)}
    for key in picked[1:]:
        coords[key] = rng.choice(COEFF_POOL)
    return InducedElement(coords)


def random_poly(rng: random.Random, deg_max: int) -> Poly:
    """A polynomial of exact degree rng-chosen in [0, deg_max]."""
    deg = rng.randint(0, deg_max)
    return Poly(tuple(rng.choice(COEFF_POOL) for _ in range(deg)) + (rng.choice(NONZERO_POOL),))


def sample_elements(
    seed: int, spec: BModuleSpec, window: TruncationWindow, count: int
) -> list[TensorElement]:
    rng = random.Random(seed)
    return [random_tensor_element(rng, spec, window) for _ in range(count)]
