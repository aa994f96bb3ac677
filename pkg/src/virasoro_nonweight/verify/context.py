"""Inputs shared by every verification suite."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from virasoro_nonweight.algebra.hmod import BModuleSpec
from virasoro_nonweight.algebra.tensor import TensorParams
from virasoro_nonweight.models import TruncationWindow


@dataclass(frozen=True)
class SuiteContext:
    """One parameter point (μ, λ, α, V_𝔅) with the windows and seeds the suites run on."""

    params: TensorParams
    spec: BModuleSpec
    window: TruncationWindow = field(default_factory=TruncationWindow)
    seed: int = 0
    samples: int = 200
    p_max: int = 3
    probe_outer: TruncationWindow = field(
        default_factory=lambda: TruncationWindow(k_max=5, n_max=7)
    )
    probe_inner: TruncationWindow = field(
        default_factory=lambda: TruncationWindow(k_max=2, n_max=3)
    )

    def echo(self) -> dict[str, Any]:
        return {
            **self.params.echo(),
            "vb": self.spec.echo(),
            "window": self.window.model_dump(),
            "seed": self.seed,
        }
