"""Unit tests for the AC context detector."""
