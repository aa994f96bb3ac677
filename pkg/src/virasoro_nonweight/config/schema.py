"""Pydantic configuration schema for verification runs."""

from __future__ import annotations

from typing import Annotated, Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from virasoro_nonweight.algebra.hmod import BModuleSpec
from virasoro_nonweight.algebra.scalar import parse_scalar
from virasoro_nonweight.algebra.tensor import TensorParams
from virasoro_nonweight.models import TruncationWindow


def _check_scalar(value: str | int) -> str:
    text = str(value).strip()
    parse_scalar(text)
    return text


class ParamsConfig(BaseModel):
    """The triple (μ, λ, α) as scalar strings such as "2", "-1/2" or "1+i"."""

    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    mu: str = "2"
    lam: str = Field(default="1", alias="lambda")
    alpha: str = "1"

    @field_validator("mu", "lam", "alpha", mode="before")
    @classmethod
    def _scalar(cls, value: str | int) -> str:
        return _check_scalar(value)

    def to_params(self) -> TensorParams:
        return TensorParams.of(self.mu, self.lam, self.alpha)


class HighestWeightConfig(BaseModel):
    """One-dimensional V_𝔅 with L_0 acting by beta."""

    model_config = ConfigDict(extra="forbid")

    kind: Literal["highest_weight"] = "highest_weight"
    beta: str = "1"

    @field_validator("beta", mode="before")
    @classmethod
    def _scalar(cls, value: str | int) -> str:
        return _check_scalar(value)

    def to_spec(self) -> BModuleSpec:
        return BModuleSpec.highest_weight(self.beta)


class TrivialConfig(BaseModel):
    """The trivial module of dimension dim."""

    model_config = ConfigDict(extra="forbid")

    kind: Literal["trivial"]
    dim: int = Field(default=1, ge=1)

    def to_spec(self) -> BModuleSpec:
        return BModuleSpec.trivial(self.dim)


class MatricesConfig(BaseModel):
    """Explicit matrices L = [M_0, …, M_order]; column s of M_i is L_i e_s."""

    model_config = ConfigDict(extra="forbid")

    kind: Literal["matrices"]
    dim: int = Field(ge=1)
    order: int = Field(ge=0)
    L: list[list[list[str]]]

    @field_validator("L", mode="before")
    @classmethod
    def _scalars(cls, value: object) -> object:
        if not isinstance(value, list):
            return value
        return [
            [[_check_scalar(v) for v in row] if isinstance(row, list) else row for row in m]
            if isinstance(m, list)
            else m
            for m in value
        ]

    def to_spec(self) -> BModuleSpec:
        return BModuleSpec.from_matrices(self.dim, self.order, self.L)


VbConfig = Annotated[
    HighestWeightConfig | TrivialConfig | MatricesConfig, Field(discriminator="kind")
]


class ProbeConfig(BaseModel):
    """Outer and inner windows of the simplicity probe."""

    model_config = ConfigDict(extra="forbid")

    outer_k: int = Field(default=5, ge=0)
    outer_n: int = Field(default=7, ge=0)
    inner_k: int = Field(default=2, ge=0)
    inner_n: int = Field(default=3, ge=0)

    @model_validator(mode="after")
    def _inner_inside_outer(self) -> ProbeConfig:
        if self.inner_k >= self.outer_k or self.inner_n >= self.outer_n:
            raise ValueError("the inner window must be strictly smaller than the outer one")
        return self

    def outer(self, window: TruncationWindow) -> TruncationWindow:
        return TruncationWindow(
            k_max=self.outer_k, n_max=self.outer_n, m_lo=window.m_lo, m_hi=window.m_hi
        )

    def inner(self) -> TruncationWindow:
        return TruncationWindow(k_max=self.inner_k, n_max=self.inner_n)


class RunConfig(BaseModel):
    """Root configuration of a verification run."""

    model_config = ConfigDict(extra="forbid")

    params: ParamsConfig = Field(default_factory=ParamsConfig)
    vb: VbConfig = Field(default_factory=HighestWeightConfig)
    window: TruncationWindow = Field(default_factory=TruncationWindow)
    seed: int = 0
    samples: int = Field(default=200, ge=1)
    suites: list[str] = Field(default_factory=lambda: ["all"])
    p_max: int = Field(default=3, ge=0)
    probe: ProbeConfig = Field(default_factory=ProbeConfig)
