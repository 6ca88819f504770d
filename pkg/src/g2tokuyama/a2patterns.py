"""A2 patterns ``[a, b][c]`` and Tokuyama's formula in rank 2.

Circling: ``a >= b >= 0``, ``c >= 0``. Boxing for ``lambda = (l1, l2)``:
``b <= l1``, ``a <= l2 + b``, ``c <= l1 + a - 2b``. Monomial ``x^(b+c) y^a``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .algebra import CoeffPoly, Exponent, LaurentPoly, accumulate
from .characters import tokuyama_numerator
from .g2patterns import BoundViolation, CirclingViolation, VerificationReport, compare, entry_factor
from .roots import RHO, Weight, build_a2_datum


class A2Pattern(NamedTuple):
    a: int
    b: int
    c: int

    def __str__(self) -> str:
        return f"[{self.a},{self.b}][{self.c}]"


@dataclass(frozen=True)
class A2Decoration:
    circled: tuple[bool, bool, bool]
    boxed: tuple[bool, bool, bool]

    def render(self, pi) -> str:
        cells = [
            (f"_{u}" if bx else str(u)) + ("°" if cr else "")
            for u, cr, bx in zip(pi, self.circled, self.boxed)
        ]
        return f"[{cells[0]},{cells[1]}][{cells[2]}]"


def decorate_a2(pi, lam) -> A2Decoration:
    a, b, c = pi
    l1, l2 = lam
    if not (a >= b >= 0 and c >= 0):
        raise CirclingViolation(f"{tuple(pi)} violates a >= b >= 0, c >= 0")
    bounds = (l2 + b, l1, l1 + a - 2 * b)
    if any(u > ub for u, ub in zip(pi, bounds)):
        raise BoundViolation(f"{tuple(pi)} exceeds bounds {bounds} for lambda={tuple(lam)}")
    return A2Decoration(
        circled=(a == b, b == 0, c == 0),
        boxed=tuple(u == ub for u, ub in zip(pi, bounds)),
    )


def standard_contribution_a2(dec: A2Decoration) -> CoeffPoly:
    out = CoeffPoly((1,))
    for bx, cr in zip(dec.boxed, dec.circled):
        out = out * entry_factor(bx, cr)
    return out


def pattern_monomial_a2(pi) -> Exponent:
    a, b, c = pi
    return Exponent(b + c, a)


def enumerate_a2(lam) -> Iterator[A2Pattern]:
    """Patterns for ``lam`` in loop order b, a, c."""
    l1, l2 = lam
    for b in range(0, l1 + 1):
        for a in range(b, l2 + b + 1):
            for c in range(0, l1 + a - 2 * b + 1):
                yield A2Pattern(a, b, c)


def tokuyama_sum_a2(theta) -> LaurentPoly:
    """``sum_{pi in B(theta + rho)} H(pi) x^pi`` for A2."""
    lam = Weight(*theta) + RHO
    acc: dict[tuple[int, int], list[int]] = {}
    for pi in enumerate_a2(lam):
        value = standard_contribution_a2(decorate_a2(pi, lam))
        if value:
            accumulate(acc.setdefault(tuple(pattern_monomial_a2(pi)), []), value.coeffs)
    return LaurentPoly.from_accumulator(acc)


def verify_tokuyama_a2(theta) -> VerificationReport:
    theta = Weight(*theta)
    start = time.perf_counter()
    lam = theta + RHO
    patterns = zero = 0
    for pi in enumerate_a2(lam):
        patterns += 1
        if not standard_contribution_a2(decorate_a2(pi, lam)):
            zero += 1
    mismatches = compare(tokuyama_numerator(build_a2_datum(), theta), tokuyama_sum_a2(theta))
    return VerificationReport(
        task="a2-tokuyama",
        parameters={"l1": theta.l1, "l2": theta.l2},
        equal=not mismatches,
        counts={"patterns": patterns, "zero": zero},
        mismatches=mismatches,
        elapsed=time.perf_counter() - start,
    )
