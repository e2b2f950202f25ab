"""Exact finite geometry of three-qubit contexts and their four-qubit labels."""

__version__ = "0.1.0"
