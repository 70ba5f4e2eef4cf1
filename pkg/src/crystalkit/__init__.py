"""Exact computations with type A crystals, q-deformed exterior algebras and
socle multiplicities of extremal weight modules."""

__version__ = "0.1.0"
