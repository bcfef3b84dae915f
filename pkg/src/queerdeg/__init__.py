"""Queer dual equivalence graphs on signed shifted tableaux."""

__version__ = "0.1.0"
