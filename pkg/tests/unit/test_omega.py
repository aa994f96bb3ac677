"""Tests for the modules Omega(lambda, alpha) and their tensor products."""

import pytest
from hypothesis import given, settings

from tests.strategies import nonzero_scalars, polys, scalars, small_ints
from virasoro_nonweight.algebra.errors import ParameterError
from virasoro_nonweight.algebra.omega import (
    OmegaParams,
    PairElement,
    alpha_zero_submodule_check,
    omega_action,
    omega_central,
    pair_action,
    shift_scale,
)
from virasoro_nonweight.algebra.poly import Poly


class TestOmegaParams:
    """Tests for OmegaParams validation."""

    def test_zero_lambda_rejected(self):
        """Test that lambda = 0 raises ParameterError."""
        with pytest.raises(ParameterError):
            OmegaParams.of(0, 1)

    def test_echo(self):
        """Test the echoed parameter strings."""
        assert OmegaParams.of("1/2", "i").echo() == {"lambda": "1/2", "alpha": "i"}


class TestOmegaAction:
    """Tests for L_m f = lambda^m (d - m alpha) f(d - m)."""

    def test_examples(self):
        """Test small hand-computed actions."""
        assert omega_action(OmegaParams.of(1, 1), 1, Poly.of(1)) == Poly.of(-1, 1)
        assert omega_action(OmegaParams.of(2, 0), -1, Poly.of(0, 1)) == Poly.of(0, "1/2", "1/2")
        assert omega_action(OmegaParams.of(3, 5), 0, Poly.of(1, 1)) == Poly.of(0, 1, 1)

    def test_central_is_zero(self):
        """Test that C acts as zero."""
        assert omega_central(Poly.of(1, 2)).is_zero()

    def test_shift_scale(self):
        """Test the operator f -> lambda^m f(d - m)."""
        assert shift_scale(OmegaParams.of(2, 1), 2, Poly.of(0, 1)) == Poly.of(-8, 4)

    @given(nonzero_scalars, scalars, small_ints, small_ints, polys)
    @settings(max_examples=40, deadline=None)
    def test_bracket(self, lam, alpha, m, n, f):
        """Test [L_m, L_n] f = (n - m) L_{m+n} f."""
        p = OmegaParams(lam, alpha)
        lhs = omega_action(p, m, omega_action(p, n, f)) - omega_action(
            p, n, omega_action(p, m, f)
        )
        assert lhs == omega_action(p, m + n, f).scale(n - m)


class TestAlphaZeroSubmodule:
    """Tests for the d*C[d] witness at alpha = 0."""

    def test_passes_at_alpha_zero(self):
        """Test that every case passes for alpha = 0."""
        report = alpha_zero_submodule_check(OmegaParams.of("-2", 0), list(range(-3, 4)), 4)
        assert report.passed
        assert report.suite == "omega-alpha0"
        assert len(report.cases) == 14

    def test_nonzero_alpha_rejected(self):
        """Test that alpha != 0 raises ParameterError."""
        with pytest.raises(ParameterError):
            alpha_zero_submodule_check(OmegaParams.of(1, 1), [1], 2)


class TestPairAction:
    """Tests for the action on Omega (x) Omega."""

    def test_leibniz(self):
        """Test L_m(d^a (x) d^b) = L_m d^a (x) d^b + d^a (x) L_m d^b."""
        first, second = OmegaParams.of(1, 1), OmegaParams.of(2, -1)
        x = PairElement({(1, 0): 1})
        got = pair_action(first, second, 1, x)
        # L_1 d = (d - 1)^2 on the first factor, L_1 1 = 2(d + 1) on the second
        assert got == PairElement({(2, 0): 1, (0, 0): 1, (1, 1): 2})
