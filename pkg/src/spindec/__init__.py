"""Exact 2-modular decomposition numbers of symmetric groups and their spin covers."""

__version__ = "0.1.0"
