"""Unit tests."""