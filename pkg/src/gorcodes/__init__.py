"""Gorenstein simplices of dimension 2s-1 and degree s, and their binary codes."""

__version__ = "0.1.0"
