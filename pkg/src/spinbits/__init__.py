"""Spin representations of so(n) from fixed-width binary arithmetic."""

__version__ = "0.1.0"
