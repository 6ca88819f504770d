"""Exact verification of a Tokuyama-type deformation of the Weyl character
formula for G2, and of the combinatorial Gindikin-Karpelevich formula."""

from .algebra import CoeffPoly, Exponent, LaurentPoly, NotDivisible
from .characters import deformed_denominator, shifted_character, tokuyama_numerator, weyl_denominator
from .g2patterns import (
    BoundViolation,
    CirclingViolation,
    G2Pattern,
    NoCaseMatch,
    conjecture_rhs,
    decorate,
    enumerate_crystal,
    hat_contribution,
    is_bad_middle,
    pattern_monomial,
    standard_contribution,
    verify_conjecture,
)
from .roots import Weight, build_a2_datum, build_g2_datum, weyl_dimension, weyl_group_elements

__version__ = "0.1.0"
