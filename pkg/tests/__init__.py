"""Test suite for the oinftyideals package."""
