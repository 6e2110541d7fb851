# newton_maclaurin/__init__.py
"""Exact Newton-Maclaurin type inequality lab."""

__version__ = "0.1.0"
