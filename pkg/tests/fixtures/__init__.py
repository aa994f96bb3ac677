"""Test fixtures."""