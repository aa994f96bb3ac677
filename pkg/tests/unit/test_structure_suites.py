"""Tests for the bracket, filtration and tau suites."""

from dataclasses import replace

from virasoro_nonweight.algebra.tensor import TensorElement, TensorModule, TensorParams
from virasoro_nonweight.models import TruncationWindow
from virasoro_nonweight.verify import filtration
from virasoro_nonweight.verify.bracket import (
    ScaledImages,
    _commutator,
    bracket_suite,
    check_bracket,
)
from virasoro_nonweight.verify.filtration import (
    check_filtration,
    filtration_suite,
    negative_control,
)
from virasoro_nonweight.verify.submodule import check_tau, quotient_map, tau, tau_image_basis


def case(report, name):
    return next(c for c in report.cases if c.name == name)


class TestBracket:
    """Tests for the bracket law checker."""

    def test_passes_on_worked_point(self, params, hw1, small_window):
        """Test that (2, 1, 1) with beta = 1 satisfies the bracket law."""
        report = check_bracket(params, hw1, small_window, samples=10, rng_seed=3)
        assert report.passed
        assert report.witness is None
        # m = n plus every pair m < n in [-2, 2]
        assert len(report.cases) == 1 + 10

    def test_corrupted_action_fails_with_witness(self, params, hw1, small_window):
        """Test that dropping the -d/dt correction is detected."""
        report = check_bracket(params, hw1, small_window, 10, 3, drop_correction=True)
        assert not report.passed
        assert report.witness
        assert report.params["corrupted"] is True

    def test_order_one_spec(self, order_one_spec):
        """Test the bracket law with a two-dimensional V_B of order 1."""
        window = TruncationWindow(k_max=1, n_max=1, m_lo=-1, m_hi=2)
        report = check_bracket(TensorParams.of("1/2", 3, "i"), order_one_spec, window, 5, 0)
        assert report.passed

    def test_integer_commutator_matches_direct(self, order_one_spec):
        """Test the Gaussian-integer commutator against composing act twice."""
        module = TensorModule(TensorParams.of("i", "1/2", "2/3"), order_one_spec)
        keys = [(k, s, n) for k in range(2) for s in range(2) for n in range(3)]
        ms = (-2, 1, 3)
        reach = set(keys)
        for m in ms:
            for key in keys:
                reach.update(module.basis_image(m, *key))
        scaled = {m: ScaledImages(module, m, reach) for m in ms}
        for m, n in [(-2, 1), (1, 3), (-2, 3)]:
            for key in keys:
                b = TensorElement.monomial(*key)
                direct = module.act(m, module.act(n, b)) - module.act(n, module.act(m, b))
                assert _commutator(scaled[m], scaled[n], key) == direct

    def test_suite_runs_control(self, small_context):
        """Test that the suite adds the negative-control case and passes."""
        report = bracket_suite(small_context)
        assert report.passed
        assert case(report, "corrupted action is rejected").witness

    def test_suite_on_trivial(self, small_context, trivial):
        """Test that the control is marked not applicable for the trivial module."""
        ctx = replace(small_context, spec=trivial, samples=5)
        report = bracket_suite(ctx)
        assert report.passed
        assert "not applicable" in case(report, "corrupted action is rejected").note


class TestFiltration:
    """Tests for V^(n) closure and the quotient intertwiner search."""

    def test_closure_and_quotients(self, hw1, small_window):
        """Test that every V^(n) is closed at mu = 1 and each quotient finds a match."""
        report = check_filtration(2, 3, hw1, 2, small_window)
        assert report.passed
        names = [c.name for c in report.cases]
        assert names[:3] == ["V^(0) closed", "V^(1) closed", "V^(2) closed"]

    def test_quotient_weight_shift(self, hw1, small_window):
        """Test that the quotient at level n matches F(V_B, Omega(lambda, alpha + n))."""
        report = check_filtration(1, 2, hw1, 2, small_window)
        got = case(report, "V^(2)/V^(1) intertwiner search").got
        assert {"alpha": "4", "c": 0, "intertwines": True} in got["candidates"]
        assert got["matches"] >= 1

    def test_search_without_match_still_reports(self, monkeypatch, hw1, small_window):
        """Test that a search with no matching candidate is reported, not failed."""
        monkeypatch.setattr(filtration, "SHIFT_FACTORS", (1,))
        report = check_filtration(1, 2, hw1, 2, small_window)
        searched = case(report, "V^(1)/V^(0) intertwiner search")
        assert searched.passed
        assert searched.got["matches"] == 0
        assert len(searched.got["candidates"]) == 2
        assert report.passed

    def test_negative_control(self, params, hw1, small_window):
        """Test that mu = 2 moves e_0 x 1 out of V^(0) with coefficient lambda^m (mu^m - 1)."""
        ok, details = negative_control(params, hw1, small_window)
        assert ok
        assert details["m"] == -2
        assert details["coefficient"] == "-3/4"

    def test_negative_control_silent_at_mu_one(self, hw1, small_window):
        """Test that mu = 1 leaves V^(0) closed."""
        ok, details = negative_control(TensorParams.of(1, 1, 1), hw1, small_window)
        assert not ok
        assert details == {}

    def test_suite(self, small_context):
        """Test the suite on the configured point."""
        report = filtration_suite(small_context)
        assert report.passed
        assert case(report, "mu != 1 breaks V^(0)").witness


class TestTau:
    """Tests for the alpha = 0 submodule and the map tau."""

    def test_tau_and_pi(self, hw1):
        """Test tau on a monomial and that pi kills its image."""
        x = TensorElement.monomial(1, 0, 2)
        assert tau(x, hw1) == TensorElement({(2, 0, 2): 1, (1, 0, 3): -1})
        assert quotient_map(tau(x, hw1)).is_zero()
        assert quotient_map(x) == TensorElement.monomial(0, 0, 3)

    def test_image_basis_rank(self, hw1):
        """Test that tau is injective on monomials of bounded total degree."""
        # monomials with k + n <= 2: six of them
        assert tau_image_basis(hw1, 2).rank == 6

    def test_all_cases_pass(self, hw1, small_window):
        """Test closure, intertwining and the quotient at lambda = 1, mu = 2."""
        report = check_tau(1, 2, hw1, small_window)
        assert report.passed
        assert len(report.cases) == 3

    def test_order_one_spec(self, order_one_spec):
        """Test tau with a two-dimensional V_B."""
        window = TruncationWindow(k_max=1, n_max=1, m_lo=-1, m_hi=1)
        assert check_tau("1/2", 3, order_one_spec, window).passed

    def test_trivial(self, trivial, small_window):
        """Test that the quotient case is not applicable for the trivial module."""
        report = check_tau(1, 2, trivial, small_window)
        assert report.passed
        assert "not applicable" in case(
            report, "quotient matches F(V_B, Omega(lambda*mu, 0))"
        ).note

