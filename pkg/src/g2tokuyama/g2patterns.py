"""G2 Littelmann patterns ``[a, b, c, d, e][f]`` and their contributions.

Patterns use the reduced word ``s2 s1 s2 s1 s2 s1``. The cone inequalities

    2a >= 2b >= c >= 2d >= 2e >= 0,   f >= 0

decide circling (equality circles the left-hand entry), and the
weight-dependent upper bounds for ``lambda = (l1, l2)``

    e <= l1
    d <= l2 + e
    c <= l1 + 3d - 2e
    b <= l2 + c - 2d + e
    a <= l1 + 3b - 2c + 3d - 2e
    f <= l2 + a - 2b + c - 2d + e

decide boxing (equality boxes the entry). A pattern maps to the monomial
``x^(a+c+e) y^(b+d+f)``.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from .algebra import CoeffPoly, Exponent, LaurentPoly, accumulate
from .characters import tokuyama_numerator
from .roots import RHO, Weight, build_g2_datum

log = logging.getLogger(__name__)

ENTRY_NAMES = ("a", "b", "c", "d", "e", "f")


class BoundViolation(ValueError):
    """A pattern entry lies outside the cone for the given weight."""


class CirclingViolation(ValueError):
    """A pattern fails the cone (circling) inequalities."""


class NoCaseMatch(RuntimeError):
    """A corrected-contribution case table has no sub-case for a pattern."""


class G2Pattern(NamedTuple):
    a: int
    b: int
    c: int
    d: int
    e: int
    f: int

    @property
    def top_row(self) -> tuple[int, int, int, int, int]:
        return self[:5]

    def satisfies_circling(self) -> bool:
        a, b, c, d, e, f = self
        return 2 * a >= 2 * b >= c >= 2 * d >= 2 * e >= 0 and f >= 0

    @property
    def degree(self) -> int:
        return sum(self)

    def __str__(self) -> str:
        a, b, c, d, e, f = self
        return f"[{a},{b},{c},{d},{e}][{f}]"


def upper_bounds(pi, lam) -> tuple[int, int, int, int, int, int]:
    """Upper bound of each entry given the entries it depends on."""
    a, b, c, d, e, _ = pi
    l1, l2 = lam
    return (
        l1 + 3 * b - 2 * c + 3 * d - 2 * e,
        l2 + c - 2 * d + e,
        l1 + 3 * d - 2 * e,
        l2 + e,
        l1,
        l2 + a - 2 * b + c - 2 * d + e,
    )


def circled_flags(pi) -> tuple[bool, ...]:
    a, b, c, d, e, f = pi
    return (a == b, 2 * b == c, c == 2 * d, d == e, e == 0, f == 0)


@dataclass(frozen=True)
class Decoration:
    """Circled and boxed flags for entries ``a..f``.

    ``lam`` is the highest weight the boxing refers to; ``None`` means no
    upper bounds at all (the infinite crystal), so nothing is boxed.
    """

    circled: tuple[bool, ...]
    boxed: tuple[bool, ...]
    lam: Weight | None = None

    @property
    def boxing_vector(self) -> tuple[int, int, int, int, int]:
        """Top-row boxing as 0/1 entries, e.g. ``(0, 1, 0, 1, 0)``."""
        return tuple(int(x) for x in self.boxed[:5])

    @property
    def has_boxed_and_circled(self) -> bool:
        return any(c and b for c, b in zip(self.circled, self.boxed))

    def render(self, pi) -> str:
        """Human readable form: ``_u`` boxed, ``u°`` circled."""
        cells = []
        for u, c, b in zip(pi, self.circled, self.boxed):
            s = f"_{u}" if b else str(u)
            cells.append(s + ("°" if c else ""))
        return "[" + ",".join(cells[:5]) + "][" + cells[5] + "]"


def decorate(pi, lam=None) -> Decoration:
    """Compute circling and (if ``lam`` is given) boxing of ``pi``.

    Raises :class:`CirclingViolation` if ``pi`` is outside the cone and
    :class:`BoundViolation` if an entry exceeds its upper bound.
    """
    pi = G2Pattern(*pi)
    if not pi.satisfies_circling():
        raise CirclingViolation(f"{pi} violates the circling inequalities")
    circled = circled_flags(pi)
    if lam is None:
        return Decoration(circled, (False,) * 6, None)
    lam = Weight(*lam)
    bounds = upper_bounds(pi, lam)
    for name, u, ub in zip(ENTRY_NAMES, pi, bounds):
        if u > ub:
            raise BoundViolation(f"{pi}: entry {name}={u} exceeds bound {ub} for lambda={tuple(lam)}")
    boxed = tuple(u == ub for u, ub in zip(pi, bounds))
    return Decoration(circled, boxed, lam)


def is_bad_middle(pi) -> bool:
    _, b, c, d = pi[:4]
    return c == b + d and b == d + 1


# single-entry factors h(u), keyed by (boxed, circled)
_H = {
    (True, True): CoeffPoly(),
    (False, True): CoeffPoly((1,)),
    (True, False): CoeffPoly((0, -1)),
    (False, False): CoeffPoly((1, -1)),
}


def entry_factor(boxed: bool, circled: bool) -> CoeffPoly:
    return _H[(boxed, circled)]


def _product(dec: Decoration, idx) -> CoeffPoly:
    out = CoeffPoly((1,))
    for i in idx:
        out = out * _H[(dec.boxed[i], dec.circled[i])]
    return out


def standard_contribution(pi, dec: Decoration) -> CoeffPoly:
    """``H(pi)``: product of ``h(u)`` over all six entries."""
    return _product(dec, range(6))


def top_row_contribution(dec: Decoration) -> CoeffPoly:
    """``T(pi')``: the standard contribution of the top row only."""
    return _product(dec, range(5))


q = CoeffPoly.from_q_ratio

# corrected top-row values; names give the q-form they were transcribed from
_MINUS_Q_PLUS_1_OVER_Q2 = q([-1, 1], 2)
_MINUS_Q3_2Q2_2Q_1_OVER_Q4 = q([-1, 2, -2, 1], 4)
_MINUS_Q2_2Q_1_OVER_Q5 = q([-1, 2, -1], 5)
_Q_1_OVER_Q3 = q([1, -1], 3)
_Q3_2Q2_2Q_1_OVER_Q5 = q([1, -2, 2, -1], 5)
_Q2_2Q_1_OVER_Q2 = q([1, -2, 1], 2)
_Q3_3Q2_3Q_1_OVER_Q3 = q([1, -3, 3, -1], 3)
_Q3_3Q2_4Q_2_OVER_Q3 = q([1, -3, 4, -2], 3)
_Q_1_OVER_Q = q([1, -1], 1)
_Q4_3Q3_4Q2_3Q_1_OVER_Q4 = q([1, -3, 4, -3, 1], 4)
_Q5_4Q4_7Q3_7Q2_4Q_1_OVER_Q5 = q([1, -4, 7, -7, 4, -1], 5)
_ZERO = CoeffPoly()

del q

CORRECTED_BOXINGS = (
    (0, 0, 1, 0, 0),
    (1, 0, 1, 0, 0),
    (1, 0, 0, 0, 0),
    (0, 1, 0, 1, 0),
    (0, 0, 0, 0, 0),
)


def corrected_top_row(pi, dec: Decoration) -> CoeffPoly:
    """Corrected top-row value for a bad-middle pattern with a listed boxing.

    Sub-cases are tried in the listed order; the first match wins.
    Raises :class:`NoCaseMatch` if nothing applies.
    """
    a, b, c, d, e, _ = pi
    bx = dec.boxing_vector
    T = lambda: top_row_contribution(dec)

    if bx == (0, 0, 1, 0, 0):
        return _ZERO

    if bx == (1, 0, 1, 0, 0):
        if d == 0:
            return _ZERO
        if d > 0:
            return T()

    elif bx == (1, 0, 0, 0, 0):
        if e == 0 and d == 0:
            return _MINUS_Q_PLUS_1_OVER_Q2
        if e == 0 and d > 0:
            return _MINUS_Q3_2Q2_2Q_1_OVER_Q4
        if e > 0:
            return T()

    elif bx == (0, 1, 0, 1, 0):
        if a == b:
            return T()
        if b < a < c and e == 0:
            return _ZERO
        if b < a < c - e and e > 0:
            return _MINUS_Q2_2Q_1_OVER_Q5
        if a == c and e == 0:
            return _Q_1_OVER_Q3
        if a == c - e and e > 0:
            return _Q3_2Q2_2Q_1_OVER_Q5
        if a > c and e == 0:
            return _ZERO
        if a > c - e and e > 0:
            return _MINUS_Q2_2Q_1_OVER_Q5

    elif bx == (0, 0, 0, 0, 0) and e == 0:
        if a == b and d > 0:
            return _Q2_2Q_1_OVER_Q2
        if b < a < c and d > 0:
            return _Q3_3Q2_3Q_1_OVER_Q3
        if a == c and d > 0:
            return _Q3_3Q2_4Q_2_OVER_Q3
        if a > c and d > 0:
            return _Q3_3Q2_3Q_1_OVER_Q3
        if a == b and d == 0:
            return _Q_1_OVER_Q
        if a > b and d == 0:
            return _Q2_2Q_1_OVER_Q2

    elif bx == (0, 0, 0, 0, 0):
        if a == b and d > e:
            return _Q4_3Q3_4Q2_3Q_1_OVER_Q4
        if a > b and d > e:
            return _Q5_4Q4_7Q3_7Q2_4Q_1_OVER_Q5
        if a == b and d == e:
            return _Q2_2Q_1_OVER_Q2
        if a > b and d == e:
            return _Q4_3Q3_4Q2_3Q_1_OVER_Q4

    raise NoCaseMatch(f"no sub-case for {dec.render(pi)} with boxing bx{list(bx)}")


def is_corrected(pi, dec: Decoration) -> bool:
    """True when the corrected contribution is taken from a case table."""
    return (
        not dec.has_boxed_and_circled
        and is_bad_middle(pi)
        and dec.boxing_vector in CORRECTED_BOXINGS
    )


def hat_contribution(pi, dec: Decoration) -> CoeffPoly:
    """Corrected contribution ``H-hat(pi)``.

    Equal to the standard contribution unless ``pi`` is bad middle, has
    one of the listed top-row boxings, and has no entry that is both boxed
    and circled; then it is the corrected top-row value times ``h(f)``.
    """
    if not is_corrected(pi, dec):
        return standard_contribution(pi, dec)
    return corrected_top_row(pi, dec) * _H[(dec.boxed[5], dec.circled[5])]


def pattern_monomial(pi) -> Exponent:
    a, b, c, d, e, f = pi
    return Exponent(a + c + e, b + d + f)


def enumerate_crystal(lam) -> Iterator[G2Pattern]:
    """All patterns for highest weight ``lam``, nested in the order e, d, c, b, a, f."""
    l1, l2 = lam
    for e in range(0, l1 + 1):
        for d in range(e, l2 + e + 1):
            for c in range(2 * d, l1 + 3 * d - 2 * e + 1):
                for b in range((c + 1) // 2, l2 + c - 2 * d + e + 1):
                    for a in range(b, l1 + 3 * b - 2 * c + 3 * d - 2 * e + 1):
                        for f in range(0, l2 + a - 2 * b + c - 2 * d + e + 1):
                            yield G2Pattern(a, b, c, d, e, f)


@dataclass
class Census:
    """Pattern counts from one crystal sum.

    ``zero`` counts patterns with a boxed-and-circled entry; ``bad_middle``
    and ``altered`` count among the remaining patterns, ``altered`` being
    those whose corrected contribution differs from the standard one.
    """

    patterns: int = 0
    zero: int = 0
    bad_middle: int = 0
    altered: int = 0
    case_hits: Counter = field(default_factory=Counter)

    def as_dict(self) -> dict:
        return {
            "patterns": self.patterns,
            "zero": self.zero,
            "bad_middle": self.bad_middle,
            "altered": self.altered,
        }


def crystal_sum(lam, contribution=hat_contribution, census: Census | None = None) -> LaurentPoly:
    """``sum_{pi in B(lam)} contribution(pi) x^pi``.

    If ``census`` is given it is filled in along the way.
    """
    acc: dict[tuple[int, int], list[int]] = {}
    for pi in enumerate_crystal(lam):
        dec = decorate(pi, lam)
        value = contribution(pi, dec)
        if census is not None:
            census.patterns += 1
            if dec.has_boxed_and_circled:
                census.zero += 1
            elif is_bad_middle(pi):
                census.bad_middle += 1
                if is_corrected(pi, dec):
                    census.case_hits[dec.boxing_vector] += 1
                if value != standard_contribution(pi, dec):
                    census.altered += 1
        if value:
            a, b, c, d, e, f = pi
            key = (a + c + e, b + d + f)
            slot = acc.get(key)
            if slot is None:
                acc[key] = list(value.coeffs)
            else:
                accumulate(slot, value.coeffs)
    return LaurentPoly.from_accumulator(acc)


def conjecture_rhs(theta, census: Census | None = None) -> LaurentPoly:
    """``sum_{pi in B(theta + rho)} H-hat(pi) x^pi``."""
    theta = Weight(*theta)
    if not theta.is_dominant():
        raise ValueError(f"theta={tuple(theta)} is not dominant")
    return crystal_sum(theta + RHO, hat_contribution, census)


@dataclass
class VerificationReport:
    """Outcome of comparing a crystal sum with the Tokuyama numerator.

    ``mismatches`` lists ``{"monomial", "lhs", "rhs"}`` for every exponent
    where the two sides differ; ``lhs`` is the numerator side.
    """

    task: str
    parameters: dict
    equal: bool
    counts: dict
    mismatches: list = field(default_factory=list)
    elapsed: float = 0.0

    def to_record(self, with_timing: bool = False) -> dict:
        rec = {
            "schema": 1,
            "kind": "report",
            "task": self.task,
            "parameters": self.parameters,
            "equal": self.equal,
            "counts": self.counts,
            "mismatches": self.mismatches,
        }
        if with_timing:
            rec["elapsed"] = round(self.elapsed, 3)
        return rec


def compare(lhs: LaurentPoly, rhs: LaurentPoly) -> list[dict]:
    """Differing monomials in canonical order."""
    out = []
    for e in sorted(lhs.support() | rhs.support()):
        l, r = lhs[e], rhs[e]
        if l != r:
            out.append({"monomial": {"m": e.m, "n": e.n}, "lhs": list(l.coeffs), "rhs": list(r.coeffs)})
    return out


def verify_conjecture(theta) -> VerificationReport:
    """Check ``N_theta = sum H-hat(pi) x^pi`` over ``B(theta + rho)`` exactly."""
    import time

    theta = Weight(*theta)
    start = time.perf_counter()
    census = Census()
    rhs = conjecture_rhs(theta, census)
    lhs = tokuyama_numerator(build_g2_datum(), theta)
    mismatches = compare(lhs, rhs)
    elapsed = time.perf_counter() - start
    log.debug("theta=%s: %d patterns, %d mismatches, %.2fs", tuple(theta), census.patterns, len(mismatches), elapsed)
    return VerificationReport(
        task="g2-conjecture",
        parameters={"l1": theta.l1, "l2": theta.l2},
        equal=not mismatches,
        counts=census.as_dict(),
        mismatches=mismatches,
        elapsed=elapsed,
    )


def pattern_record(pi, dec: Decoration, value: CoeffPoly) -> dict:
    """Serialization of one decorated pattern."""
    e = pattern_monomial(pi)
    return {
        "entries": list(pi),
        "circled": list(dec.circled),
        "boxed": list(dec.boxed),
        "monomial": {"m": e.m, "n": e.n},
        "contribution": list(value.coeffs),
    }
