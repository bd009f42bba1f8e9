"""Constant-composition codes from residue polynomials over finite fields."""
from .bounds import (
    BoundReport, L, bound_report, gamma, lemma1_lower, lemma2_lower, lemma3_lower,
    lemma4_upper, primorial_Q, theorem1_lower,
)
from .composition import Composition, enumerate_words, hamming, multinomial
from .construction import (
    ConstructedCode, ConstructionParams, build_code, guaranteed_distance, mu, pi_image,
)
from .field import FieldElement, FieldParams, enumerate_elements, field_new
from .residue_ring import CosetRep, ResiduePoly, canonical_rep, ring_inv, ring_mul, ring_pow
from .verify import check_composition, exact_max_code, exact_min_distance, verify_code

__version__ = "0.1.0"
