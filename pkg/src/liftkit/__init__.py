"""Exact tools for polytopes, slack matrices and their polyhedral and spectrahedral lifts."""

__version__ = "0.1.0"
