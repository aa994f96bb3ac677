"""Pytest configuration and fixtures."""

import pytest

from virasoro_nonweight.algebra.hmod import BModuleSpec
from virasoro_nonweight.algebra.tensor import TensorParams
from virasoro_nonweight.models import TruncationWindow
from virasoro_nonweight.verify.context import SuiteContext


def two_dim_spec() -> BModuleSpec:
    """L_0 = diag(0, 1), L_1 e_0 = e_1: a non-simple module of order 1."""
    return BModuleSpec.from_matrices(2, 1, [[[0, 0], [0, 1]], [[0, 0], [1, 0]]])


@pytest.fixture
def hw1():
    """Highest-weight spec with beta = 1."""
    return BModuleSpec.highest_weight(1)


@pytest.fixture
def hw0():
    """Module induced from the trivial one-dimensional B-module."""
    return BModuleSpec.highest_weight(0)


@pytest.fixture
def trivial():
    """The trivial module of dimension one."""
    return BModuleSpec.trivial()


@pytest.fixture
def order_one_spec():
    """A two-dimensional spec with M_1 != 0."""
    return two_dim_spec()


@pytest.fixture
def params():
    """(mu, lambda, alpha) = (2, 1, 1)."""
    return TensorParams.of(2, 1, 1)


@pytest.fixture
def small_window():
    """A window small enough for exact suites to run quickly."""
    return TruncationWindow(k_max=2, n_max=2, m_lo=-2, m_hi=2)


@pytest.fixture
def small_context(params, hw1, small_window):
    """Suite context on (2, 1, 1) with beta = 1 and small windows."""
    return SuiteContext(
        params=params,
        spec=hw1,
        window=small_window,
        samples=10,
        p_max=2,
        probe_outer=TruncationWindow(k_max=3, n_max=4, m_lo=-2, m_hi=2),
        probe_inner=TruncationWindow(k_max=1, n_max=2),
    )


@pytest.fixture
def sample_config_dict():
    """Sample run configuration dictionary."""
    return {
        "params": {"mu": "2", "lambda": "1", "alpha": "1"},
        "vb": {"kind": "highest_weight", "beta": "1"},
        "window": {"k_max": 2, "n_max": 2, "m_lo": -2, "m_hi": 2},
        "seed": 7,
        "samples": 10,
        "suites": ["bracket"],
        "p_max": 2,
        "probe": {"outer_k": 3, "outer_n": 4, "inner_k": 1, "inner_n": 2},
    }
