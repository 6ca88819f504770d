"""Rank-2 root data for G2 and A2.

Vectors are written in *root coordinates* ``(u, v)``: the integer
coefficients of the two simple roots. The first simple root pairs with the
variable ``x`` and the second with ``y``; for G2 the first simple root is
the short one.

Weights are written ``Weight(l1, l2)`` in fundamental-weight coordinates
and converted with :meth:`RootDatum.to_root_coords`. For G2 this gives
``w1 = (2, 1)`` (the 7-dimensional representation) and ``w2 = (3, 2)``
(the adjoint representation).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple

import numpy as np


class Weight(NamedTuple):
    """Weight ``l1 * w1 + l2 * w2`` in fundamental-weight coordinates."""

    l1: int
    l2: int

    def is_dominant(self) -> bool:
        return self.l1 >= 0 and self.l2 >= 0

    def __add__(self, other):
        return Weight(self.l1 + other[0], self.l2 + other[1])


RHO = Weight(1, 1)


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element acting on root coordinates."""

    matrix: tuple[tuple[int, int], tuple[int, int]]
    sign: int
    length: int

    def apply(self, v):
        (a, b), (c, d) = self.matrix
        return (a * v[0] + b * v[1], c * v[0] + d * v[1])

    def as_array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=np.int64)


@dataclass(frozen=True)
class RootDatum:
    """Rank-2 root system given by its Cartan matrix and root lengths.

    ``cartan[i][j] = <alpha_i^vee, alpha_j>``; ``symmetrizer[i]`` is half
    the squared length of ``alpha_i``, so the invariant form on simple
    roots is ``(alpha_i, alpha_j) = symmetrizer[i] * cartan[i][j]``.
    """

    name: str
    cartan: tuple[tuple[int, int], tuple[int, int]]
    symmetrizer: tuple[int, int]
    positive_roots: tuple[tuple[int, int], ...] = field(init=False)
    rank: int = 2

    def __post_init__(self):
        object.__setattr__(self, "positive_roots", tuple(sorted(self._generate_positive_roots())))

    # -- geometry ------------------------------------------------------
    @cached_property
    def gram(self) -> np.ndarray:
        """Invariant form on root coordinates."""
        A = np.array(self.cartan, dtype=np.int64)
        return np.diag(self.symmetrizer) @ A

    @cached_property
    def _gram_rows(self) -> list[list[int]]:
        return self.gram.tolist()

    def inner(self, u, v):
        g = self._gram_rows
        return sum(u[i] * g[i][j] * v[j] for i in range(2) for j in range(2))

    @property
    def simple_roots(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((1, 0), (0, 1))

    def reflection_matrix(self, i: int) -> np.ndarray:
        """Simple reflection ``s_i`` acting on root coordinates (columns are images of simple roots)."""
        S = np.eye(2, dtype=np.int64)
        for j in range(2):
            S[i, j] -= self.cartan[i][j]
        return S

    def _generate_positive_roots(self) -> set[tuple[int, int]]:
        # orbit of the simple roots under W, positive half
        roots = set()
        frontier = [tuple(r) for r in self.simple_roots]
        while frontier:
            r = frontier.pop()
            if r in roots:
                continue
            roots.add(r)
            for i in range(2):
                img = tuple(int(v) for v in self.reflection_matrix(i) @ np.array(r))
                if img not in roots:
                    frontier.append(img)
        return {r for r in roots if r[0] >= 0 and r[1] >= 0}

    @property
    def all_roots(self) -> tuple[tuple[int, int], ...]:
        return self.positive_roots + tuple((-u, -v) for u, v in self.positive_roots)

    @property
    def rho(self) -> tuple[int, int]:
        """Half the sum of the positive roots, in root coordinates."""
        su = sum(r[0] for r in self.positive_roots)
        sv = sum(r[1] for r in self.positive_roots)
        if su % 2 or sv % 2:
            raise ValueError("rho is not integral in root coordinates")
        return (su // 2, sv // 2)

    @cached_property
    def fundamental_weights(self) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
        """Fundamental weights in root coordinates, as exact fractions.

        Rows of ``(A^T)^{-1}``.
        """
        (a, b), (c, d) = self.cartan
        # A^T = [[a, c], [b, d]]
        det = a * d - b * c
        inv = ((Fraction(d, det), Fraction(-c, det)), (Fraction(-b, det), Fraction(a, det)))
        return inv

    def to_root_coords(self, weight) -> tuple[Fraction, Fraction]:
        w1, w2 = self.fundamental_weights
        l1, l2 = weight
        return (l1 * w1[0] + l2 * w2[0], l1 * w1[1] + l2 * w2[1])

    def coroot_pairing(self, v, alpha) -> Fraction:
        """``<v, alpha^vee> = 2 (v, alpha) / (alpha, alpha)``."""
        return Fraction(2 * self.inner(v, alpha), self.inner(alpha, alpha))


def build_g2_datum() -> RootDatum:
    """G2 with ``x`` on the short simple root and ``y`` on the long one."""
    return RootDatum("G2", cartan=((2, -3), (-1, 2)), symmetrizer=(1, 3))


def build_a2_datum() -> RootDatum:
    return RootDatum("A2", cartan=((2, -1), (-1, 2)), symmetrizer=(1, 1))


def weyl_group_elements(datum: RootDatum) -> list[WeylElement]:
    """All Weyl group elements, by breadth-first closure over simple reflections.

    Sorted by (length, matrix) so the order is canonical.
    """
    gens = [datum.reflection_matrix(i) for i in range(datum.rank)]
    identity = np.eye(2, dtype=np.int64)
    key = lambda M: tuple(map(tuple, M.tolist()))
    seen = {key(identity): 0}
    layer = [identity]
    length = 0
    while layer:
        length += 1
        nxt = []
        for M in layer:
            for S in gens:
                P = S @ M
                k = key(P)
                if k not in seen:
                    seen[k] = length
                    nxt.append(P)
        layer = nxt
    elements = [
        WeylElement(matrix=k, sign=(-1) ** ln, length=ln) for k, ln in seen.items()
    ]
    elements.sort(key=lambda w: (w.length, w.matrix))
    return elements


def weyl_dimension(datum: RootDatum, weight) -> int:
    """Dimension of the irreducible representation with highest weight ``weight``."""
    lam = datum.to_root_coords(weight)
    rho = datum.rho
    shifted = (lam[0] + rho[0], lam[1] + rho[1])
    num = Fraction(1)
    for alpha in datum.positive_roots:
        num *= Fraction(datum.inner(shifted, alpha)) / datum.inner(rho, alpha)
    if num.denominator != 1:
        raise ArithmeticError(f"non-integral dimension {num}")
    return int(num)
