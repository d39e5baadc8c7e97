"""Test suite for Production Health Guardian."""
