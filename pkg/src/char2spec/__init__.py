"""Exact laboratory for bounded-spectrum matrix subspaces over GF(2^k).

Builds the named matrix spaces of the characteristic-2 bounded-spectrum
theory, verifies their spectrum properties exhaustively or by seeded
sampling, and mechanically checks the finite instances of the supporting
lemmas (trace duality, adapted-vector scans, hurdle detection, covering
and vanishing harnesses, the constructive choice solver).
"""

__version__ = "0.1.0"

from .gf import GF2, GF4, GF8, GF16, FieldSpec, field_spec
from .matrix import Mat, char_poly, companion, min_poly
from .subspace import MatSubspace, VecSubspace, span
from .spectra import SpecPredicate, SpectrumProfile, check_space, parse_predicate, profile

__all__ = [
    "GF2", "GF4", "GF8", "GF16", "FieldSpec", "field_spec",
    "Mat", "char_poly", "companion", "min_poly",
    "MatSubspace", "VecSubspace", "span",
    "SpecPredicate", "SpectrumProfile", "check_space", "parse_predicate", "profile",
    "__version__",
]
