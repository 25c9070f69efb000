"""Zinkwell test suite."""
