"""Utils unit tests."""
