"""Unit tests for liftcount."""
