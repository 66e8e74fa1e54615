"""
Algebra module - polynomials, u_n, triangular automorphisms, the N_d filtration.
"""

from .polynomial import Polynomial
from .derivation import UniDerivation, bracket, apply, ideal_index, ad_power, exp_ad
from .automorphism import TriangularAutomorphism, apply_to_poly, compose, invert, act_on_derivation
from .filtration import (
    BasisIndex,
    FiltrationBasis,
    SpannedSubalgebra,
    TruncatedLieMap,
    enumerate_basis,
    coords,
    membership_level,
    derived_span,
    derived_length,
    rank_of,
)
from .endomorphism import (
    GeneratorDecomposition,
    HomomorphismViolation,
    endo_from_automorphism,
    endo_from_exp_ad,
    check_homomorphism,
    check_injectivity,
    extract_generators,
    check_pairwise_commuting,
)
from .normalizer import construct_sigma, normalize

__all__ = [
    "Polynomial",
    "UniDerivation",
    "bracket",
    "apply",
    "ideal_index",
    "ad_power",
    "exp_ad",
    "TriangularAutomorphism",
    "apply_to_poly",
    "compose",
    "invert",
    "act_on_derivation",
    "BasisIndex",
    "FiltrationBasis",
    "SpannedSubalgebra",
    "TruncatedLieMap",
    "enumerate_basis",
    "coords",
    "membership_level",
    "derived_span",
    "derived_length",
    "rank_of",
    "GeneratorDecomposition",
    "HomomorphismViolation",
    "endo_from_automorphism",
    "endo_from_exp_ad",
    "check_homomorphism",
    "check_injectivity",
    "extract_generators",
    "check_pairwise_commuting",
    "construct_sigma",
    "normalize",
]
