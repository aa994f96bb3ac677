"""Exact algebra: scalars, polynomials, Omega modules, induced modules and the tensor action."""

from virasoro_nonweight.algebra.errors import ElementParseError, ModuleSpecError, ParameterError
from virasoro_nonweight.algebra.hmod import (
    BModuleSpec,
    ElementOrder,
    InducedElement,
    exp_coefficients,
    exp_derivation,
    h_action,
    order,
)
from virasoro_nonweight.algebra.omega import OmegaParams, PairElement, omega_action, pair_action
from virasoro_nonweight.algebra.poly import Poly, j_basis, shift
from virasoro_nonweight.algebra.scalar import GaussianRational, ScalarParseError, parse_scalar
from virasoro_nonweight.algebra.tensor import (
    FModuleView,
    TensorElement,
    TensorModule,
    TensorParams,
    apply_word,
    f_action,
    l_action,
)

__all__ = [
    "GaussianRational",
    "ScalarParseError",
    "parse_scalar",
    "Poly",
    "shift",
    "j_basis",
    "OmegaParams",
    "PairElement",
    "omega_action",
    "pair_action",
    "BModuleSpec",
    "InducedElement",
    "ElementOrder",
    "h_action",
    "order",
    "exp_derivation",
    "exp_coefficients",
    "TensorParams",
    "TensorElement",
    "TensorModule",
    "FModuleView",
    "l_action",
    "apply_word",
    "f_action",
    "ParameterError",
    "ModuleSpecError",
    "ElementParseError",
]
