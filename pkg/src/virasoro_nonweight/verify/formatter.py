"""Plain-text summaries of verification reports."""

from __future__ import annotations

import json
from collections.abc import Sequence

from virasoro_nonweight.models import IsoVerdict, VerifyReport


def _witness_text(witness: list[dict[str, object]] | None) -> str:
    if not witness:
        return ""
    terms = [
        f"{term['c']}*L-1^{term['k']} e_{term['s']} d^{term['n']}" for term in witness[:6]
    ]
    more = " + ..." if len(witness) > 6 else ""
    return " + ".join(terms) + more


class ReportFormatter:
    """Format reports as terminal text: one status line per suite, details for failures."""

    STATUS = {
        "pass": "PASS",
        "fail": "FAIL",
        "skip": "SKIP",
    }

    def status(self, report: VerifyReport) -> str:
        if report.skipped:
            return self.STATUS["skip"]
        return self.STATUS["pass"] if report.passed else self.STATUS["fail"]

    def format_report(self, report: VerifyReport, verbose: bool = False) -> str:
        """
        Format one report.

        Args:
            report: The suite report.
            verbose: Also list every case, not only the first failing one.

        Returns:
            Multi-line text.
        """
        passed = sum(1 for case in report.cases if case.passed)
        head = f"[{self.status(report)}] {report.suite}"
        if report.skipped:
            return f"{head}: skipped ({report.reason})"
        head += f": {passed}/{len(report.cases)} cases"
        if report.evidence_only:
            head += " (evidence only)"
        lines = [head]

        if verbose:
            for case in report.cases:
                mark = "ok  " if case.passed else "FAIL"
                note = f"  # {case.note}" if case.note else ""
                lines.append(f"    {mark} {case.name}{note}")

        if failure := report.first_failure():
            lines.append(f"    first failure: {failure.name}")
            if failure.inputs:
                lines.append(f"      inputs:   {json.dumps(failure.inputs, sort_keys=True)}")
            if failure.expected is not None:
                lines.append(f"      expected: {failure.expected}")
            if failure.got is not None:
                lines.append(f"      got:      {json.dumps(failure.got, default=str)}")
            if witness := _witness_text(failure.witness):
                lines.append(f"      witness:  {witness}")
        return "\n".join(lines)

    def format_summary(self, reports: Sequence[VerifyReport], verbose: bool = False) -> str:
        """All reports followed by a totals line."""
        blocks = [self.format_report(report, verbose) for report in reports]
        failed = [r.suite for r in reports if not r.skipped and not r.passed]
        skipped = sum(1 for r in reports if r.skipped)
        total = f"{len(reports) - len(failed) - skipped} passed, {len(failed)} failed"
        total += f", {skipped} skipped"
        if failed:
            total += f" ({', '.join(failed)})"
        return "\n".join([*blocks, total])

    def format_verdict(self, verdict: IsoVerdict) -> str:
        lines = [verdict.kind.value, f"  reason: {verdict.reason}"]
        for key in ("case_a", "case_b", "beta1", "beta2"):
            if key in verdict.conditions:
                lines.append(f"  {key}: {verdict.conditions[key]}")
        return "\n".join(lines)
