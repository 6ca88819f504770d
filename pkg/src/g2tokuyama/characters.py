"""Characters and denominators via the Weyl character formula.

All polynomials live in root coordinates with ``x`` and ``y`` attached to
the first and second simple roots. Characters are indexed by *lowest*
weight ``-theta`` and shifted so the lowest-weight monomial is ``x^0``;
with that convention

    chi_theta = sum_w sign(w) x^{(theta+rho) - w(theta+rho)} / prod_{a>0} (1 - x^a)

and every exponent in the numerator is already a nonnegative integer
vector, also for A2 where ``theta`` itself need not be in the root lattice.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import CoeffPoly, LaurentPoly
from .roots import RootDatum, Weight, weyl_group_elements


@dataclass(frozen=True)
class ShiftedCharacter:
    weight: Weight
    poly: LaurentPoly


def weyl_denominator(datum: RootDatum) -> LaurentPoly:
    """``prod_{a>0} (1 - x^a)``."""
    result = LaurentPoly.one()
    for u, v in datum.positive_roots:
        result = result * LaurentPoly({(0, 0): 1, (u, v): -1})
    return result


def deformed_denominator(datum: RootDatum) -> LaurentPoly:
    """``prod_{a>0} (1 - t x^a)``."""
    minus_t = CoeffPoly((0, -1))
    result = LaurentPoly.one()
    for u, v in datum.positive_roots:
        result = result * LaurentPoly({(0, 0): 1, (u, v): minus_t})
    return result


def _integral(v) -> tuple[int, int]:
    if any(getattr(c, "denominator", 1) != 1 for c in v):
        raise ArithmeticError(f"exponent {v} is not integral")
    return (int(v[0]), int(v[1]))


def alternating_numerator(datum: RootDatum, theta) -> LaurentPoly:
    """``sum_w sign(w) x^{(theta+rho) - w(theta+rho)}``, exponents in root coordinates."""
    lam = datum.to_root_coords(theta)
    rho = datum.rho
    top = (lam[0] + rho[0], lam[1] + rho[1])
    terms = {}
    for w in weyl_group_elements(datum):
        img = w.apply(top)
        e = _integral((top[0] - img[0], top[1] - img[1]))
        terms[e] = terms.get(e, 0) + w.sign
    return LaurentPoly(terms)


def shifted_character(datum: RootDatum, theta) -> ShiftedCharacter:
    """Character of the irreducible with lowest weight ``-theta``, shifted to start at ``x^0``.

    Computed as an exact quotient; :class:`~g2tokuyama.algebra.NotDivisible`
    here would mean a convention bug.
    """
    theta = Weight(*theta)
    if not theta.is_dominant():
        raise ValueError(f"theta={tuple(theta)} is not dominant")
    num = alternating_numerator(datum, theta)
    return ShiftedCharacter(theta, num.exact_div(weyl_denominator(datum)))


def tokuyama_numerator(datum: RootDatum, theta) -> LaurentPoly:
    """``N_theta = chi_theta * D``."""
    return shifted_character(datum, theta).poly * deformed_denominator(datum)
