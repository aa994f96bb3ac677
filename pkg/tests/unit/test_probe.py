"""Tests for the windowed closure and the simplicity probes."""

from dataclasses import replace

import pytest

from virasoro_nonweight.algebra.errors import ParameterError
from virasoro_nonweight.algebra.hmod import InducedElement
from virasoro_nonweight.algebra.tensor import TensorElement, TensorModule, TensorParams
from virasoro_nonweight.models import TruncationWindow
from virasoro_nonweight.verify.probe import (
    WindowedClosure,
    probe_suite,
    pure_tensor_suite,
    simplicity_probe,
    top_nonvanishing_index,
)

OUTER = TruncationWindow(k_max=3, n_max=4, m_lo=-2, m_hi=2)
INNER = TruncationWindow(k_max=1, n_max=2)


class TestWindowedClosure:
    """Tests for the closure bookkeeping."""

    def test_inside_rows_stay_inside(self, params, hw1):
        """Test that every inside row is supported in the window."""
        closure = WindowedClosure(TensorModule(params, hw1), OUTER).run(
            [TensorElement.monomial(0, 0, 0)]
        )
        assert closure.inside
        for row in closure.inside_rows():
            assert all(OUTER.contains(k, n) for k, _, n in row.coords)

    def test_mu_one_keeps_degree_zero(self, hw1):
        """Test that at mu = 1 nothing with an L_-1 power is generated from e_0 x 1."""
        module = TensorModule(TensorParams.of(1, 1, 1), hw1)
        closure = WindowedClosure(module, OUTER).run([TensorElement.monomial(0, 0, 0)])
        assert not closure.contains(TensorElement.monomial(1, 0, 0))
        assert closure.contains(TensorElement.monomial(0, 0, 3))


class TestSimplicityProbe:
    """Tests for the cyclic-seed probe."""

    def test_simple_point_is_cyclic(self, params, hw1):
        """Test that e_0 x 1 generates the inner window at (2, 1, 1)."""
        report = simplicity_probe(params, hw1, TensorElement.monomial(0, 0, 0), OUTER, INNER)
        assert report.evidence_only
        assert report.passed

    def test_mu_one_is_not_cyclic(self, hw1):
        """Test that e_0 x 1 misses L_-1 e_0 x 1 at mu = 1."""
        report = simplicity_probe(
            TensorParams.of(1, 1, 1), hw1, TensorElement.monomial(0, 0, 0), OUTER, INNER
        )
        assert not report.passed
        assert {"k": 1, "s": 0, "n": 0} in report.cases[0].got

    def test_zero_seed_rejected(self, params, hw1):
        """Test that a zero seed raises ParameterError."""
        with pytest.raises(ParameterError):
            simplicity_probe(params, hw1, TensorElement.zero(), OUTER, INNER)

    @pytest.mark.parametrize(
        "inner",
        [
            TruncationWindow(k_max=5, n_max=5),
            TruncationWindow(k_max=3, n_max=2),
            TruncationWindow(k_max=1, n_max=4),
        ],
    )
    def test_inner_window_must_fit(self, params, hw1, inner):
        """Test that an inner window reaching the outer bounds raises ParameterError."""
        with pytest.raises(ParameterError, match="strictly smaller"):
            simplicity_probe(params, hw1, TensorElement.monomial(0, 0, 0), OUTER, inner)


class TestProbeSuite:
    """Tests for the probe suite's expected outcomes."""

    def test_simple(self, small_context):
        """Test the cyclic case."""
        report = probe_suite(small_context)
        assert report.passed
        assert report.params["expected"] == "cyclic"
        assert len(report.cases) == 2
        assert report.cases[1].inputs["seed"] == [{"k": 1, "s": 0, "n": 1, "c": "1"}]

    def test_mu_one(self, small_context):
        """Test that V^(0) is confirmed invariant at mu = 1."""
        report = probe_suite(replace(small_context, params=TensorParams.of(1, 1, 1)))
        assert report.passed
        assert report.cases[0].name == "closure of e_0 x 1 stays in V^(0)"

    def test_alpha_zero(self, small_context):
        """Test that the tau-image closure lies in ker pi at alpha = 0."""
        report = probe_suite(replace(small_context, params=TensorParams.of(2, 1, 0)))
        assert report.passed
        assert report.cases[0].name == "closure of tau(e_0 x 1) lies in ker pi"

    def test_trivial_alpha_zero(self, small_context, trivial):
        """Test that the trivial module at alpha = 0 keeps d*C[d]."""
        report = probe_suite(
            replace(small_context, params=TensorParams.of(2, 1, 0), spec=trivial)
        )
        assert report.passed
        assert report.cases[0].name == "closure of e_0 x d avoids constants"


class TestPureTensor:
    """Tests for the pure-tensor suite."""

    def test_top_index(self, hw1, hw0, trivial):
        """Test the largest index with L_r u != 0."""
        assert top_nonvanishing_index(hw1, InducedElement.vector(k=2)) == 2
        assert top_nonvanishing_index(hw0, InducedElement.vector()) == -1
        assert top_nonvanishing_index(trivial, InducedElement.vector()) == -2

    def test_highest_weight_vector(self, small_context):
        """Test that the closure of v x d reaches v x C[d] in the inner window."""
        report = pure_tensor_suite(small_context)
        cases = {c.name: c for c in report.cases}
        assert cases["L_0^i (e_s x 1) == e_s x d^i"].passed
        assert cases["closure of (e_0 * 1) x d"].passed
        assert cases["closure of (e_0 * 1) x d"].inputs["r"] == 0

    def test_trivial_not_applicable(self, small_context, trivial):
        """Test that a vector killed by everything is marked not applicable."""
        report = pure_tensor_suite(replace(small_context, spec=trivial))
        assert report.passed
        assert "not applicable" in report.cases[1].note

    def test_mu_one_rejected(self, small_context):
        """Test that mu = 1 raises ParameterError."""
        with pytest.raises(ParameterError):
            pure_tensor_suite(replace(small_context, params=TensorParams.of(1, 2, 1)))

    def test_order_one_spec(self, small_context, order_one_spec):
        """Test the L_0 power case with a two-dimensional V_B."""
        report = pure_tensor_suite(replace(small_context, spec=order_one_spec))
        assert report.cases[0].passed
