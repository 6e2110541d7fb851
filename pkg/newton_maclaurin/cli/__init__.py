# newton_maclaurin/cli/__init__.py
"""CLI package for the Newton-Maclaurin lab."""
