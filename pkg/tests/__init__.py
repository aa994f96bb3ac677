"""Tests for virasoro-nonweight."""
