"""Tests for tutte-forge."""
