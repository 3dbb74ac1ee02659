"""Exact Auslander-Reiten theory for categories of n-term complexes of
projective modules over bound quiver algebras."""

__version__ = "0.1.0"
