"""Exact computer algebra for tangent spaces and pathologies of Hilbert schemes of points."""

from .field import FieldSpec
from .groebner import (
    IdealHandle,
    colength,
    groebner_basis,
    ideal_quotient,
    intersect,
    normal_form,
    quotient,
    saturate,
    standard_monomials,
)
from .ring import Polynomial, PolyRing, monomials_of_bidegree, parse_polynomial

__all__ = [
    "FieldSpec",
    "IdealHandle",
    "PolyRing",
    "Polynomial",
    "colength",
    "groebner_basis",
    "ideal_quotient",
    "intersect",
    "monomials_of_bidegree",
    "normal_form",
    "parse_polynomial",
    "quotient",
    "saturate",
    "standard_monomials",
]
