"""Exact checks for bicrossed product Hopf algebras of matched pairs of Lie
algebras and for the cyclic complexes with SAYD coefficients built on them."""

__version__ = "0.1.0"
