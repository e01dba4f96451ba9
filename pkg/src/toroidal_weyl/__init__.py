"""Exact computations for twisted toroidal Lie algebras, their presentations,
automorphisms, lattice vertex algebras and level-one Weyl module characters."""

from .scalar import Scalar

__all__ = ["Scalar"]
__version__ = "0.1.0"
