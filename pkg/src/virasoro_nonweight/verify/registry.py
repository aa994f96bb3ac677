"""Suite registry for dispatching verification runs by name."""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable

from virasoro_nonweight.algebra.errors import ParameterError
from virasoro_nonweight.models import VerifyReport
from virasoro_nonweight.verify.bracket import bracket_suite
from virasoro_nonweight.verify.context import SuiteContext
from virasoro_nonweight.verify.filtration import filtration_suite
from virasoro_nonweight.verify.identities import (
    collapse_suite,
    eq_extra_suite,
    omega_alpha0_suite,
    omega_basis_suite,
    ord_suite,
)
from virasoro_nonweight.verify.isomorphism import classify_suite, phi_suite, psi_suite
from virasoro_nonweight.verify.probe import probe_suite, pure_tensor_suite
from virasoro_nonweight.verify.submodule import tau_suite

logger = logging.getLogger(__name__)

Suite = Callable[[SuiteContext], VerifyReport]


class SuiteError(Exception):
    """A requested suite name is not registered."""


class SuiteRegistry:
    """Registry for verification suites with dispatch capabilities."""

    def __init__(self) -> None:
        self._suites: dict[str, Suite] = {}

    def register(self, name: str, func: Suite) -> None:
        """
        Register a suite.

        Args:
            name: Suite name as used on the command line and in reports.
            func: Callable taking the shared context and returning its report.
        """
        self._suites[name] = func

    def execute(self, name: str, ctx: SuiteContext) -> VerifyReport:
        """
        Run one suite and return its report.

        A ParameterError means the suite does not apply to the configured point,
        which yields a skipped report; any other exception is reported as a
        failed case so the remaining suites still run.
        """
        if name not in self._suites:
            raise SuiteError(f"Unknown suite: {name}")

        logger.info(f"running suite {name}")
        try:
            return self._suites[name](ctx)
        except ParameterError as e:
            logger.info(f"suite {name} skipped: {e}")
            return VerifyReport(suite=name, params=ctx.echo(), skipped=True, reason=str(e))
        except Exception as e:
            logger.exception(f"suite {name} raised")
            report = VerifyReport(suite=name, params=ctx.echo())
            report.add_case("suite raised", passed=False, got=f"{type(e).__name__}: {e}")
            return report

    @property
    def suite_names(self) -> list[str]:
        """Registered suite names in registration order."""
        return list(self._suites.keys())

    def resolve(self, selection: Iterable[str]) -> list[str]:
        """
        Expand a selection into registered names, keeping registration order.

        Entries may be names, comma-separated lists, or "all".
        """
        wanted: set[str] = set()
        for entry in selection:
            for name in filter(None, (part.strip() for part in entry.split(","))):
                if name == "all":
                    wanted.update(self._suites)
                elif name in self._suites:
                    wanted.add(name)
                else:
                    raise SuiteError(
                        f"Unknown suite: {name} (known: {', '.join(self._suites)})"
                    )
        return [name for name in self._suites if name in wanted]

    def run(self, selection: Iterable[str], ctx: SuiteContext) -> list[VerifyReport]:
        """Run the selected suites one after another."""
        return [self.execute(name, ctx) for name in self.resolve(selection)]


def default_registry() -> SuiteRegistry:
    """A registry holding every built-in suite."""
    registry = SuiteRegistry()
    registry.register("bracket", bracket_suite)
    registry.register("filtration", filtration_suite)
    registry.register("tau", tau_suite)
    registry.register("phi", phi_suite)
    registry.register("classify", classify_suite)
    registry.register("psi", psi_suite)
    registry.register("probe", probe_suite)
    registry.register("omega-alpha0", omega_alpha0_suite)
    registry.register("eq-extra", eq_extra_suite)
    registry.register("ord", ord_suite)
    registry.register("omega-basis", omega_basis_suite)
    registry.register("collapse", collapse_suite)
    registry.register("pure-tensor", pure_tensor_suite)
    return registry


def run_suites(selection: Iterable[str], ctx: SuiteContext) -> list[VerifyReport]:
    return default_registry().run(selection, ctx)
