"""Certified verification of infinite-series identities against closed forms."""

__version__ = "0.1.0"
