"""Integration tests - test components working together."""
