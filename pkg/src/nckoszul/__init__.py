"""Homological invariants of graded noncommutative algebras: Gröbner bases,
minimal resolutions, Yoneda-algebra generation and the K2 property."""

from .field import Field, FieldError
from .words import Alphabet, Poly
from .groebner import Presentation, complete, is_groebner, associated_graded
from .quotient import QuotientAlgebra, build_quotient
from .presfile import parse_presentation, format_presentation, load_presentation

__all__ = [
    "Field", "FieldError", "Alphabet", "Poly", "Presentation", "complete",
    "is_groebner", "associated_graded", "QuotientAlgebra", "build_quotient",
    "parse_presentation", "format_presentation", "load_presentation",
]
