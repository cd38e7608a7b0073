# efountain/__init__.py
"""Finite reduced E-Fountain semigroups, their categories, and the algebra isomorphism."""
from efountain.algebra import AlgebraElement, phi, psi, verify_homomorphism, verify_isomorphism
from efountain.catalan import generate_catalan, run_catalan_checks, verify_catalan_isomorphism
from efountain.category import FiniteCategory, build_category
from efountain.errors import FountainError
from efountain.fountain import EFountainStructure, analyze_reduced_e_fountain
from efountain.orders import embedding_order, tri_left
from efountain.pipeline import dispatch, run_analysis
from efountain.semigroup import FiniteSemigroup, Transformation, from_cayley_table, from_transformations

__all__ = [
    "AlgebraElement",
    "EFountainStructure",
    "FiniteCategory",
    "FiniteSemigroup",
    "FountainError",
    "Transformation",
    "analyze_reduced_e_fountain",
    "build_category",
    "dispatch",
    "embedding_order",
    "from_cayley_table",
    "from_transformations",
    "generate_catalan",
    "phi",
    "psi",
    "run_analysis",
    "run_catalan_checks",
    "tri_left",
    "verify_catalan_isomorphism",
    "verify_homomorphism",
    "verify_isomorphism",
]
