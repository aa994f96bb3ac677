"""Hypothesis strategies for scalars, polynomials and module elements."""

from hypothesis import strategies as st

from virasoro_nonweight.algebra.hmod import InducedElement
from virasoro_nonweight.algebra.poly import Poly
from virasoro_nonweight.algebra.scalar import GaussianRational
from virasoro_nonweight.algebra.tensor import TensorElement

# Small exact rationals keep examples cheap.
rationals = st.fractions(min_value=-4, max_value=4, max_denominator=4)
scalars = st.builds(GaussianRational, rationals, rationals)
nonzero_scalars = scalars.filter(bool)
polys = st.lists(scalars, max_size=4).map(lambda cs: Poly(tuple(cs)))
small_ints = st.integers(min_value=-3, max_value=3)


def induced_elements(dim: int = 1, k_max: int = 2) -> st.SearchStrategy[InducedElement]:
    keys = st.tuples(st.integers(0, k_max), st.integers(0, dim - 1))
    return st.dictionaries(keys, scalars, max_size=3).map(InducedElement)


def tensor_elements(
    dim: int = 1, k_max: int = 2, n_max: int = 2
) -> st.SearchStrategy[TensorElement]:
    keys = st.tuples(st.integers(0, k_max), st.integers(0, dim - 1), st.integers(0, n_max))
    return st.dictionaries(keys, scalars, max_size=3).map(TensorElement)
