"""Tests for liftcount."""
