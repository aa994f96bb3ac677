"""Report and window models shared by the verification suites and the CLI."""

from enum import Enum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator


class TruncationWindow(BaseModel):
    """
    Finite window on 𝓜(V,μ,Ω(λ,α)).

    Basis monomials L₋₁ᵏ e_s ⊗ ∂ⁿ with k ≤ k_max and n ≤ n_max, acted on by
    generators L_m with m_lo ≤ m ≤ m_hi.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    k_max: int = Field(default=4, ge=0)
    n_max: int = Field(default=5, ge=0)
    m_lo: int = -4
    m_hi: int = 4

    @model_validator(mode="after")
    def _check_m_range(self) -> "TruncationWindow":
        if self.m_lo > self.m_hi:
            raise ValueError(f"m_lo ({self.m_lo}) must not exceed m_hi ({self.m_hi})")
        return self

    @property
    def m_values(self) -> list[int]:
        return list(range(self.m_lo, self.m_hi + 1))

    def contains(self, k: int, n: int) -> bool:
        return 0 <= k <= self.k_max and 0 <= n <= self.n_max


class CaseResult(BaseModel):
    """One checked case of a suite."""

    model_config = ConfigDict(populate_by_name=True)

    name: str
    passed: bool = Field(alias="pass")
    inputs: dict[str, Any] = Field(default_factory=dict)
    expected: Any = None
    got: Any = None
    witness: list[dict[str, Any]] | None = None  # TensorElement JSON form
    note: str | None = None


class VerifyReport(BaseModel):
    """Outcome of a verification suite: every case, and the overall flag."""

    model_config = ConfigDict(populate_by_name=True)

    suite: str
    params: dict[str, Any] = Field(default_factory=dict)
    cases: list[CaseResult] = Field(default_factory=list)
    skipped: bool = False
    reason: str | None = None
    evidence_only: bool = False  # finite probe, not a proof
    witness: list[dict[str, Any]] | None = None

    @computed_field(alias="pass")  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return all(case.passed for case in self.cases)

    def add_case(self, name: str, passed: bool, **fields: Any) -> CaseResult:
        case = CaseResult(name=name, passed=passed, **fields)
        self.cases.append(case)
        return case

    def first_failure(self) -> CaseResult | None:
        return next((case for case in self.cases if not case.passed), None)

    def to_json_dict(self) -> dict[str, Any]:
        return self.model_dump(mode="json", by_alias=True, exclude_none=True)


class IsoKind(str, Enum):
    """Isomorphism classification outcomes."""

    CASE_A = "IsomorphicCaseA"
    CASE_B = "IsomorphicCaseB"
    NOT_ISOMORPHIC = "NotIsomorphic"
    UNKNOWN = "Unknown"


class IsoVerdict(BaseModel):
    """Verdict of the isomorphism classifier with the data it was decided on."""

    kind: IsoKind
    conditions: dict[str, Any] = Field(default_factory=dict)
    reason: str = ""
