"""Exact torus geometry: the symplectic and Courant examples."""

from .trig import OneForm, TrigPoly, VectorField, d
from .verify import ExampleReport, verify_example_structures

__all__ = ["OneForm", "TrigPoly", "VectorField", "d", "ExampleReport",
           "verify_example_structures"]
