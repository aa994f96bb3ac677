"""Tests for the suite registry and the report formatter."""

from dataclasses import replace

import pytest

from virasoro_nonweight.algebra.errors import ParameterError
from virasoro_nonweight.algebra.tensor import TensorParams
from virasoro_nonweight.models import IsoKind, IsoVerdict, VerifyReport
from virasoro_nonweight.verify.formatter import ReportFormatter
from virasoro_nonweight.verify.registry import SuiteError, SuiteRegistry, default_registry


def passing_suite(ctx):
    report = VerifyReport(suite="ok")
    report.add_case("always", passed=True)
    return report


def skipping_suite(ctx):
    raise ParameterError("needs mu != 1")


def broken_suite(ctx):
    raise RuntimeError("boom")


class TestSuiteRegistry:
    """Tests for SuiteRegistry."""

    def test_default_names(self):
        """Test that every built-in suite is registered in order."""
        assert default_registry().suite_names == [
            "bracket",
            "filtration",
            "tau",
            "phi",
            "classify",
            "psi",
            "probe",
            "omega-alpha0",
            "eq-extra",
            "ord",
            "omega-basis",
            "collapse",
            "pure-tensor",
        ]

    def test_resolve(self):
        """Test names, comma lists and 'all' resolve in registration order."""
        registry = default_registry()
        assert registry.resolve(["tau,bracket"]) == ["bracket", "tau"]
        assert registry.resolve(["ord", "ord"]) == ["ord"]
        assert registry.resolve(["all"]) == registry.suite_names

    def test_unknown_suite(self):
        """Test that an unknown name raises SuiteError listing the known ones."""
        with pytest.raises(SuiteError, match="Unknown suite: nope"):
            default_registry().resolve(["nope"])
        with pytest.raises(SuiteError):
            SuiteRegistry().execute("nope", None)

    def test_skip_on_parameter_error(self, small_context):
        """Test that a ParameterError gives a skipped report with the reason."""
        registry = SuiteRegistry()
        registry.register("needs", skipping_suite)
        report = registry.execute("needs", small_context)
        assert report.skipped
        assert report.reason == "needs mu != 1"
        assert report.params["mu"] == "2"

    def test_other_exceptions_fail(self, small_context):
        """Test that any other exception becomes a failed case."""
        registry = SuiteRegistry()
        registry.register("broken", broken_suite)
        registry.register("ok", passing_suite)
        reports = registry.run(["all"], small_context)
        assert [r.passed for r in reports] == [False, True]
        assert reports[0].cases[0].name == "suite raised"
        assert reports[0].cases[0].got == "RuntimeError: boom"

    def test_pure_tensor_skipped_at_mu_one(self, small_context):
        """Test a built-in suite that does not apply to the point."""
        ctx = replace(small_context, params=TensorParams.of(1, 1, 1))
        (report,) = default_registry().run(["pure-tensor"], ctx)
        assert report.skipped


class TestReportFormatter:
    """Tests for ReportFormatter."""

    def test_passing_report(self):
        """Test the status line of a passing report."""
        report = VerifyReport(suite="bracket")
        report.add_case("a", passed=True)
        report.add_case("b", passed=True)
        assert ReportFormatter().format_report(report) == "[PASS] bracket: 2/2 cases"

    def test_failing_report(self):
        """Test that the first failure is detailed with its witness."""
        report = VerifyReport(suite="tau")
        report.add_case(
            "tau intertwines",
            passed=False,
            inputs={"m": 1},
            expected="equal",
            got=[{"m": 1}],
            witness=[{"k": 1, "s": 0, "n": 2, "c": "1/2"}],
        )
        text = ReportFormatter().format_report(report)
        assert text.startswith("[FAIL] tau: 0/1 cases")
        assert "first failure: tau intertwines" in text
        assert 'inputs:   {"m": 1}' in text
        assert "witness:  1/2*L-1^1 e_0 d^2" in text

    def test_skipped_and_evidence(self):
        """Test skipped and evidence-only markers."""
        formatter = ReportFormatter()
        skipped = VerifyReport(suite="phi", skipped=True, reason="phi needs a highest-weight V")
        assert formatter.format_report(skipped) == (
            "[SKIP] phi: skipped (phi needs a highest-weight V)"
        )
        probe = VerifyReport(suite="probe", evidence_only=True)
        probe.add_case("seed generates the inner window", passed=True)
        assert formatter.format_report(probe).endswith("(evidence only)")

    def test_verbose_lists_cases(self):
        """Test that verbose output lists every case with its note."""
        report = VerifyReport(suite="bracket")
        report.add_case("m = n", passed=True, note="both sides vanish identically")
        text = ReportFormatter().format_report(report, verbose=True)
        assert "ok   m = n  # both sides vanish identically" in text

    def test_summary_totals(self):
        """Test the totals line."""
        good = VerifyReport(suite="ord")
        good.add_case("x", passed=True)
        bad = VerifyReport(suite="psi")
        bad.add_case("x", passed=False)
        skipped = VerifyReport(suite="phi", skipped=True, reason="r")
        summary = ReportFormatter().format_summary([good, bad, skipped])
        assert summary.splitlines()[-1] == "1 passed, 1 failed, 1 skipped (psi)"

    def test_verdict(self):
        """Test the classifier verdict text."""
        verdict = IsoVerdict(
            kind=IsoKind.CASE_B, conditions={"case_a": False, "case_b": True}, reason="r"
        )
        text = ReportFormatter().format_verdict(verdict)
        assert text.splitlines() == [
            "IsomorphicCaseB",
            "  reason: r",
            "  case_a: False",
            "  case_b: True",
        ]


class TestReportJson:
    """Tests for the report JSON form."""

    def test_pass_alias(self):
        """Test that the JSON form uses the 'pass' key."""
        report = VerifyReport(suite="ord")
        report.add_case("x", passed=True)
        data = report.to_json_dict()
        assert data["pass"] is True
        assert data["cases"][0]["pass"] is True
        assert "witness" not in data
