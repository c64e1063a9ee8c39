"""Exact-arithmetic construction and certification of BBP-type formulas."""

__version__ = "0.1.0"
