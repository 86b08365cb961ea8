"""Integration tests for liftcount."""
