"""Combinatorial Gindikin-Karpelevich identity for G2.

Three truncated power series that should agree degree by degree:

* :func:`gk_lhs_series` -- ``prod_{a>0} (1 - t x^a) / (1 - x^a)``,
* :func:`partition_sum_series` -- ``sum_xi (1 - t)^{index(xi)} x^xi`` over
  vector partitions of the positive roots,
* :func:`gk_pattern_series` -- ``sum H-hat(pi) x^pi`` over unboxed patterns
  of the infinite crystal.

Patterns and vector partitions are matched by writing a pattern in one of
two unimodular cones that together cover the circling cone.

Root labels (root coordinates ``(x-degree, y-degree)``)::

    alpha1 = (0, 1)   long simple
    alpha2 = (1, 0)   short simple
    alpha3 = (1, 1)
    alpha4 = (2, 1)
    alpha3p = (3, 1)
    alpha5 = (3, 2)
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterator, Mapping

import sympy

from .algebra import CoeffPoly, LaurentPoly, ONE_MINUS_T, accumulate, truncated_product
from .g2patterns import (
    CirclingViolation,
    G2Pattern,
    decorate,
    hat_contribution,
    pattern_monomial,
    standard_contribution,
)

ROOTS: dict[str, tuple[int, int]] = {
    "alpha1": (0, 1),
    "alpha2": (1, 0),
    "alpha3": (1, 1),
    "alpha4": (2, 1),
    "alpha3p": (3, 1),
    "alpha5": (3, 2),
}
ROOT_NAMES = tuple(ROOTS)

GENERATORS: dict[str, tuple[int, ...]] = {
    "v1": (0, 0, 0, 0, 0, 1),
    "v2": (1, 0, 0, 0, 0, 0),
    "v3": (1, 1, 0, 0, 0, 0),
    "v3p": (1, 1, 2, 0, 0, 0),
    "v4": (1, 1, 1, 0, 0, 0),
    "v5": (1, 1, 2, 1, 0, 0),
    "v6": (1, 1, 2, 1, 1, 0),
}
CONE_1 = ("v1", "v2", "v3", "v4", "v5", "v6")
CONE_2 = ("v1", "v2", "v3p", "v4", "v5", "v6")
EDGE_GENERATORS = ("v1", "v2", "v3", "v3p", "v5", "v6")


def generator_matrix(names) -> sympy.Matrix:
    """Generators as the columns of an integer matrix."""
    return sympy.Matrix([GENERATORS[n] for n in names]).T


def generator_lattice_index(names) -> int:
    """Index in ``Z^6`` of the lattice spanned by six generators (``|det|``)."""
    return abs(int(generator_matrix(names).det()))


@dataclass(frozen=True)
class VectorPartition:
    """Multiplicities on the six positive roots, in :data:`ROOT_NAMES` order."""

    multiplicity: tuple[int, int, int, int, int, int]

    @classmethod
    def from_dict(cls, d: Mapping[str, int]) -> VectorPartition:
        unknown = set(d) - set(ROOT_NAMES)
        if unknown:
            raise KeyError(f"unknown roots {sorted(unknown)}")
        return cls(tuple(d.get(n, 0) for n in ROOT_NAMES))

    def as_dict(self) -> dict[str, int]:
        return {n: k for n, k in zip(ROOT_NAMES, self.multiplicity) if k}

    @property
    def index(self) -> int:
        return sum(1 for k in self.multiplicity if k)

    @property
    def monomial(self) -> tuple[int, int]:
        m = sum(k * ROOTS[n][0] for n, k in zip(ROOT_NAMES, self.multiplicity))
        n_ = sum(k * ROOTS[n][1] for n, k in zip(ROOT_NAMES, self.multiplicity))
        return (m, n_)

    @property
    def degree(self) -> int:
        return sum(self.monomial)

    def __str__(self) -> str:
        d = self.as_dict()
        return " + ".join(f"{k}*{n}" for n, k in d.items()) or "0"


def cone_coordinates(pi) -> dict[str, int]:
    """Coefficients of ``pi`` in the unimodular cone containing it.

    Uses the first cone when ``c <= b + d`` (this includes the shared face
    ``c == b + d``), the second otherwise.
    """
    pi = G2Pattern(*pi)
    if not pi.satisfies_circling():
        raise CirclingViolation(f"{pi} violates the circling inequalities")
    a, b, c, d, e, f = pi
    coords = {"v1": f, "v2": a - b, "v5": d - e, "v6": e}
    if c <= b + d:
        coords["v3"] = b + d - c
        coords["v4"] = c - 2 * d
    else:
        coords["v3p"] = c - b - d
        coords["v4"] = 2 * b - c
    return coords


def pattern_to_partition(pi) -> VectorPartition:
    k = cone_coordinates(pi)
    v6 = k["v6"]
    return VectorPartition((
        k["v1"],
        k["v2"],
        k.get("v3", 0) + v6,
        k["v4"],
        k.get("v3p", 0) + v6,
        k["v5"],
    ))


def partition_to_pattern(xi: VectorPartition) -> G2Pattern:
    """Inverse of :func:`pattern_to_partition`."""
    m1, m2, m3, m4, m3p, m5 = xi.multiplicity
    v6 = min(m3, m3p)
    coeffs = {"v1": m1, "v2": m2, "v3": m3 - v6, "v3p": m3p - v6, "v4": m4, "v5": m5, "v6": v6}
    out = [0] * 6
    for name, k in coeffs.items():
        for i, g in enumerate(GENERATORS[name]):
            out[i] += k * g
    return G2Pattern(*out)


def enumerate_circling(max_degree: int) -> Iterator[G2Pattern]:
    """All circling-valid patterns with ``a+b+c+d+e+f <= max_degree``."""
    N = max_degree
    for e in range(0, N // 5 + 1):
        for d in range(e, N + 1):
            if 5 * d - e > N:  # c >= 2d, b >= d, a >= b
                break
            for c in range(2 * d, N + 1):
                b0 = (c + 1) // 2
                if 2 * b0 + c + d + e > N:
                    break
                for b in range(b0, N + 1):
                    if 2 * b + c + d + e > N:
                        break
                    rest = N - (b + c + d + e)
                    for a in range(b, rest + 1):
                        for f in range(0, rest - a + 1):
                            yield G2Pattern(a, b, c, d, e, f)


def enumerate_partitions(max_degree: int) -> Iterator[VectorPartition]:
    """All vector partitions of total degree at most ``max_degree``."""
    weights = [sum(ROOTS[n]) for n in ROOT_NAMES]

    def rec(i, budget, prefix):
        if i == len(weights):
            yield VectorPartition(tuple(prefix))
            return
        w = weights[i]
        for k in range(budget // w + 1):
            prefix.append(k)
            yield from rec(i + 1, budget - k * w, prefix)
            prefix.pop()

    yield from rec(0, max_degree, [])


def gk_lhs_series(max_degree: int) -> LaurentPoly:
    """``prod_{a>0} (1 - t x^a) * sum_k x^{k a}``, truncated at total degree ``max_degree``."""
    factors = []
    for u, v in ROOTS.values():
        geometric = LaurentPoly({(k * u, k * v): 1 for k in range(max_degree // (u + v) + 1)})
        factors.append(geometric * LaurentPoly({(0, 0): 1, (u, v): [0, -1]}))
    return truncated_product(factors, max_degree)


def partition_sum_series(max_degree: int) -> LaurentPoly:
    acc: dict[tuple[int, int], list[int]] = {}
    for xi in enumerate_partitions(max_degree):
        accumulate(acc.setdefault(xi.monomial, []), (ONE_MINUS_T ** xi.index).coeffs)
    return LaurentPoly.from_accumulator(acc)


def infinite_contribution(pi) -> CoeffPoly:
    """Corrected contribution of an unboxed pattern of the infinite crystal."""
    return hat_contribution(pi, decorate(pi))


def gk_pattern_series(max_degree: int) -> LaurentPoly:
    acc: dict[tuple[int, int], list[int]] = {}
    for pi in enumerate_circling(max_degree):
        value = infinite_contribution(pi)
        if value:
            accumulate(acc.setdefault(tuple(pattern_monomial(pi)), []), value.coeffs)
    return LaurentPoly.from_accumulator(acc)


OUTSIDE = "outside"


def subcone_classify(pi) -> frozenset[int] | str:
    """Relative-interior subcone of the shared face ``c == b + d``.

    Returns :data:`OUTSIDE` off that face, otherwise the set of generator
    indices from ``{1, 2, 4, 5, 6}`` with positive coefficient.
    """
    pi = G2Pattern(*pi)
    if not pi.satisfies_circling():
        raise CirclingViolation(f"{pi} violates the circling inequalities")
    a, b, c, d, e, f = pi
    if c != b + d:
        return OUTSIDE
    coeffs = {1: f, 2: a - b, 4: b - d, 5: d - e, 6: e}
    return frozenset(i for i, k in coeffs.items() if k > 0)


def subcone_name(label) -> str:
    if label == OUTSIDE:
        return OUTSIDE
    return "".join(str(i) for i in sorted(label)) or "0"


# Marks the audit is expected to reproduce, keyed by subcone name.
EXPECTED_VP = frozenset({"4", "6", "24", "26", "45", "56", "245", "256"})
EXPECTED_CORR = frozenset({"4", "24", "45", "46", "245", "246", "456", "2456"})


ROWS = ("vp", "corr", "vp_hat")


@dataclass
class SubconeAudit:
    """Per-subcone discrepancy counts on the shared face.

    Rows, for every pattern with partition ``xi``:

    * ``vp`` -- standard ``H`` differs from ``(1 - t)^index(xi)``,
    * ``corr`` -- ``H-hat`` differs from ``H``,
    * ``vp_hat`` -- ``H-hat`` differs from ``(1 - t)^index(xi)``.

    Subcones are keyed with the ``v1`` direction dropped: the bottom entry
    multiplies every contribution and the partition weight by the same
    factor, so it never changes whether they agree.
    """

    max_degree: int
    patterns: Counter = field(default_factory=Counter)
    counts: dict = field(default_factory=lambda: {r: Counter() for r in ROWS})
    # discrepancies away from the shared face; expected to stay zero
    outside: Counter = field(default_factory=Counter)
    witnesses: dict = field(default_factory=dict)

    def marks(self, row: str) -> frozenset[str]:
        return frozenset(k for k, v in self.counts[row].items() if v)

    def columns(self) -> list[str]:
        return sorted(self.patterns, key=lambda s: (len(s), s))

    def to_record(self) -> dict:
        cols = self.columns()
        rec = {"schema": 1, "kind": "audit", "max_degree": self.max_degree, "columns": cols}
        for row in ROWS:
            rec[row] = {c: self.counts[row][c] > 0 for c in cols}
        rec["witness_counts"] = {row: {c: self.counts[row][c] for c in cols} for row in ROWS}
        rec["witness_counts"]["patterns"] = {c: self.patterns[c] for c in cols}
        rec["outside"] = {row: self.outside[row] for row in ROWS}
        rec["witnesses"] = {k: list(v) for k, v in sorted(self.witnesses.items())}
        return rec

    def render(self) -> str:
        cols = [c for c in self.columns() if any(self.counts[r][c] for r in ROWS)]
        width = max(len(c) for c in cols) + 1
        lines = [" " * 7 + "".join(c.rjust(width) for c in cols)]
        for row in ROWS:
            cells = "".join(("*" if self.counts[row][c] else ".").rjust(width) for c in cols)
            lines.append(row.ljust(7) + cells)
        return "\n".join(lines)


def audit_subcones(max_degree: int) -> SubconeAudit:
    """Tabulate, per shared-face subcone, where contributions disagree."""
    audit = SubconeAudit(max_degree)
    for pi in enumerate_circling(max_degree):
        dec = decorate(pi)
        hat = hat_contribution(pi, dec)
        std = standard_contribution(pi, dec)
        weight = ONE_MINUS_T ** pattern_to_partition(pi).index
        flags = {"vp": std != weight, "corr": hat != std, "vp_hat": hat != weight}
        label = subcone_classify(pi)
        if label == OUTSIDE:
            audit.outside.update(r for r, v in flags.items() if v)
            continue
        name = subcone_name(label - {1})
        audit.patterns[name] += 1
        for row, flag in flags.items():
            if flag:
                audit.counts[row][name] += 1
                audit.witnesses.setdefault(f"{row}:{name}", tuple(pi))
    return audit


def triple_agreement(max_degree: int) -> dict:
    """Compute the three series and report pairwise equality."""
    lhs = gk_lhs_series(max_degree)
    parts = partition_sum_series(max_degree)
    pats = gk_pattern_series(max_degree)
    return {
        "schema": 1,
        "kind": "gk-triple",
        "max_degree": max_degree,
        "lhs_eq_partitions": lhs == parts,
        "lhs_eq_patterns": lhs == pats,
        "equal": lhs == parts == pats,
        "terms": len(lhs),
    }


def degree_counts(max_degree: int) -> tuple[list[int], list[int]]:
    """Numbers of patterns and of vector partitions in each degree ``0..max_degree``."""
    pats = [0] * (max_degree + 1)
    for pi in enumerate_circling(max_degree):
        pats[pi.degree] += 1
    parts = [0] * (max_degree + 1)
    for xi in enumerate_partitions(max_degree):
        parts[xi.degree] += 1
    return pats, parts


def series_by_subcone(max_degree: int) -> dict[str, LaurentPoly]:
    """Corrected-contribution series restricted to each shared-face subcone (for exploration)."""
    acc: dict[str, dict] = defaultdict(dict)
    for pi in enumerate_circling(max_degree):
        label = subcone_classify(pi)
        if label == OUTSIDE:
            continue
        value = infinite_contribution(pi)
        if value:
            accumulate(acc[subcone_name(label)].setdefault(tuple(pattern_monomial(pi)), []), value.coeffs)
    return {k: LaurentPoly.from_accumulator(v) for k, v in sorted(acc.items())}
