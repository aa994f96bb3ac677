"""Verification suites over finite windows of the tensor modules."""

from virasoro_nonweight.verify.context import SuiteContext
from virasoro_nonweight.verify.formatter import ReportFormatter
from virasoro_nonweight.verify.registry import (
    SuiteError,
    SuiteRegistry,
    default_registry,
    run_suites,
)

__all__ = [
    "SuiteContext",
    "SuiteRegistry",
    "SuiteError",
    "ReportFormatter",
    "default_registry",
    "run_suites",
]
