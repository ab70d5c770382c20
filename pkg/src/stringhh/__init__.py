"""Hochschild cohomology and Gerstenhaber structure of quadratic monomial algebras."""
from .basis import chains, max_chain_length, multiply, nonzero_paths
from .cohomology import Cohomology, CohomologyClass, NotACocycle, class_of, cohomology, hh_basis, hh_dim
from .complex import Cochain, CochainComplex, cochain_basis, cochain_complex, delta_matrix, normalize, shift_minus, shift_plus
from .generate import RandomSpec, random_presentation
from .gerstenhaber import bracket, circ, circ_at, cup, induced_bracket, induced_cup, lie_table, ring_table
from .harness import fuzz, verify
from .presentation import Path, Presentation, PresentationError, classify, compose, emit_presentation, parse_presentation

__version__ = "0.1.0"

__all__ = [
    "Cochain",
    "CochainComplex",
    "Cohomology",
    "CohomologyClass",
    "NotACocycle",
    "Path",
    "Presentation",
    "PresentationError",
    "RandomSpec",
    "bracket",
    "chains",
    "circ",
    "circ_at",
    "class_of",
    "classify",
    "cochain_basis",
    "cochain_complex",
    "cohomology",
    "compose",
    "cup",
    "delta_matrix",
    "emit_presentation",
    "fuzz",
    "hh_basis",
    "hh_dim",
    "induced_bracket",
    "induced_cup",
    "lie_table",
    "max_chain_length",
    "multiply",
    "nonzero_paths",
    "normalize",
    "parse_presentation",
    "random_presentation",
    "ring_table",
    "shift_minus",
    "shift_plus",
    "verify",
]
