"""Contract tests - verify all implementations behave consistently."""
