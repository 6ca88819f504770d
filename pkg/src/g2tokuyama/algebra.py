"""Exact sparse polynomial arithmetic.

Two layers:

* :class:`CoeffPoly` -- a univariate polynomial in ``t`` (think ``t = 1/q``)
  with Python integer coefficients.
* :class:`LaurentPoly` -- a sparse map from exponent vectors ``(m, n)`` to
  :class:`CoeffPoly`, i.e. an element of ``Z[t][x^±1, y^±1]``.

Python integers are arbitrary precision, so no operation can overflow.
Every value is immutable and kept in canonical form (no trailing zero
coefficients, no zero terms).
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping, NamedTuple


class NotDivisible(ArithmeticError):
    """Raised when an exact quotient is requested but a remainder is left."""


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class CoeffPoly:
    """Polynomial in ``t`` with integer coefficients; ``coeffs[i]`` multiplies ``t**i``."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _trim(coeffs)
        for v in c:
            if not isinstance(v, int):
                raise TypeError(f"coefficients must be int, got {type(v).__name__}")
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("CoeffPoly is immutable")

    @classmethod
    def constant(cls, c: int) -> CoeffPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, c: int, k: int) -> CoeffPoly:
        """``c * t**k``."""
        return cls([0] * k + [c])

    @classmethod
    def from_q_ratio(cls, numerator: Iterable[int], q_power: int) -> CoeffPoly:
        """Convert ``(n_k q^k + ... + n_0) / q^q_power`` to a polynomial in ``t = 1/q``.

        ``numerator`` lists the q-coefficients from the highest power down to
        the constant term. Raises ``ValueError`` if the result is not a
        polynomial in ``t`` (some q-power exceeds ``q_power``).
        """
        num = list(numerator)
        top = len(num) - 1
        out = [0] * (q_power + 1)
        for i, c in enumerate(num):
            k = top - i  # power of q
            if c == 0:
                continue
            if k > q_power:
                raise ValueError("expression is not a polynomial in 1/q")
            out[q_power - k] += c
        return cls(out)

    # -- basic protocol -------------------------------------------------
    def __repr__(self) -> str:
        return f"CoeffPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                mono = str(abs(c))
            else:
                tk = "t" if k == 1 else f"t^{k}"
                mono = tk if abs(c) == 1 else f"{abs(c)}*{tk}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, mono in parts[1:]:
            s += f" {sign} {mono}"
        return s

    def __eq__(self, other) -> bool:
        if isinstance(other, CoeffPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim((other,))
        return NotImplemented

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(("CoeffPoly", self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree in ``t``; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    # -- arithmetic -----------------------------------------------------
    @staticmethod
    def _coerce(other) -> CoeffPoly:
        if isinstance(other, CoeffPoly):
            return other
        if isinstance(other, int):
            return CoeffPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return CoeffPoly(out)

    __radd__ = __add__

    def __neg__(self) -> CoeffPoly:
        return CoeffPoly(-v for v in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return CoeffPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return CoeffPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> CoeffPoly:
        if k < 0:
            raise ValueError("negative power")
        result = CoeffPoly((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def exact_div(self, other: CoeffPoly) -> CoeffPoly:
        """Quotient in ``Z[t]``; raises :class:`NotDivisible` on a remainder."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        db = other.degree
        lead = other.coeffs[-1]
        if len(rem) - 1 < db:
            if rem:
                raise NotDivisible(f"{self} is not divisible by {other}")
            return CoeffPoly()
        quot = [0] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            qc, r = divmod(c, lead)
            if r:
                raise NotDivisible(f"{self} is not divisible by {other} over Z")
            quot[k - db] = qc
            for j, v in enumerate(other.coeffs):
                rem[k - db + j] -= qc * v
        if any(rem):
            raise NotDivisible(f"{self} is not divisible by {other}")
        return CoeffPoly(quot)

    def __call__(self, t):
        """Evaluate at ``t`` (Horner); exact for int/Fraction inputs."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc


ZERO_C = CoeffPoly()
ONE_C = CoeffPoly((1,))
T = CoeffPoly((0, 1))
ONE_MINUS_T = CoeffPoly((1, -1))


class Exponent(NamedTuple):
    """Exponent vector of ``x**m * y**n``."""

    m: int
    n: int

    @property
    def total_degree(self) -> int:
        return self.m + self.n


def _coeff(value) -> CoeffPoly:
    if isinstance(value, CoeffPoly):
        return value
    if isinstance(value, int):
        return CoeffPoly((value,))
    if isinstance(value, (list, tuple)):
        return CoeffPoly(value)
    raise TypeError(f"cannot use {type(value).__name__} as a coefficient")


def _graded_key(e: tuple[int, int]) -> tuple[int, int]:
    # graded lex: total degree first, then the x-exponent
    return (e[0] + e[1], e[0])


class LaurentPoly:
    """Sparse element of ``Z[t][x^±1, y^±1]``.

    Construct from a mapping ``{(m, n): coeff}`` where ``coeff`` is a
    :class:`CoeffPoly`, an ``int`` or a list of ints (coefficients of
    ``t**0, t**1, ...``). Zero coefficients are dropped.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        d: dict[Exponent, CoeffPoly] = {}
        for e, c in items:
            e = Exponent(int(e[0]), int(e[1]))
            c = _coeff(c)
            if e in d:
                c = d[e] + c
            if c:
                d[e] = c
            else:
                d.pop(e, None)
        object.__setattr__(self, "_terms", d)

    @classmethod
    def _raw(cls, d: dict) -> LaurentPoly:
        # caller guarantees canonical form
        obj = cls.__new__(cls)
        object.__setattr__(obj, "_terms", d)
        return obj

    @classmethod
    def from_accumulator(cls, acc: Mapping[tuple[int, int], list[int]]) -> LaurentPoly:
        """Build from a ``{(m, n): [c0, c1, ...]}`` accumulator, dropping zeros."""
        d = {}
        for e, coeffs in acc.items():
            c = CoeffPoly(coeffs)
            if c:
                d[Exponent(*e)] = c
        return cls._raw(d)

    @classmethod
    def monomial(cls, m: int, n: int, coeff=1) -> LaurentPoly:
        return cls({(m, n): coeff})

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls({(0, 0): 1})

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls()

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- mapping-ish read access ----------------------------------------
    def __getitem__(self, e) -> CoeffPoly:
        return self._terms.get(Exponent(*e), ZERO_C)

    coefficient = __getitem__

    def __iter__(self) -> Iterator[Exponent]:
        return iter(sorted(self._terms))

    def __len__(self) -> int:
        return len(self._terms)

    def __contains__(self, e) -> bool:
        return Exponent(*e) in self._terms

    def items(self) -> list[tuple[Exponent, CoeffPoly]]:
        """Terms sorted by ``(m, n)``."""
        return sorted(self._terms.items())

    def support(self) -> set[Exponent]:
        return set(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self == LaurentPoly({(0, 0): other})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly({ {tuple(e): list(c.coeffs) for e, c in self.items()} })"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (m, n), c in self.items():
            mono = "*".join(
                s for s in (
                    "" if m == 0 else ("x" if m == 1 else f"x^{m}"),
                    "" if n == 0 else ("y" if n == 1 else f"y^{n}"),
                ) if s
            )
            cs = str(c)
            if not mono:
                parts.append(f"({cs})" if len(c.coeffs) > 1 or c.coeffs[0] < 0 else cs)
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"({cs})*{mono}")
        return " + ".join(parts)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({(0, 0): other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        d = dict(self._terms)
        for e, c in other._terms.items():
            s = d[e] + c if e in d else c
            if s:
                d[e] = s
            else:
                del d[e]
        return LaurentPoly._raw(d)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({(0, 0): other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, CoeffPoly)):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc: dict[tuple[int, int], list[int]] = {}
        for (m1, n1), c1 in self._terms.items():
            a = c1.coeffs
            for (m2, n2), c2 in other._terms.items():
                key = (m1 + m2, n1 + n2)
                b = c2.coeffs
                slot = acc.get(key)
                need = len(a) + len(b) - 1
                if slot is None:
                    slot = acc[key] = [0] * need
                elif len(slot) < need:
                    slot.extend([0] * (need - len(slot)))
                for i, x in enumerate(a):
                    if x:
                        for j, y in enumerate(b):
                            slot[i + j] += x * y
        return LaurentPoly.from_accumulator(acc)

    def __rmul__(self, other):
        if isinstance(other, (int, CoeffPoly)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            raise ValueError("negative power")
        result = LaurentPoly.one()
        for _ in range(k):
            result = result * self
        return result

    def scale(self, c) -> LaurentPoly:
        """Multiply every coefficient by ``c`` (a :class:`CoeffPoly` or int)."""
        c = _coeff(c)
        if not c:
            return LaurentPoly()
        return LaurentPoly.from_accumulator(
            {e: (v * c).coeffs for e, v in self._terms.items()}
        )

    def shift(self, dm: int, dn: int) -> LaurentPoly:
        """Multiply by the monomial ``x**dm * y**dn``."""
        return LaurentPoly._raw(
            {Exponent(m + dm, n + dn): c for (m, n), c in self._terms.items()}
        )

    def truncate(self, max_total_degree: int) -> LaurentPoly:
        """Keep exactly the terms with ``m + n <= max_total_degree``."""
        return LaurentPoly._raw(
            {e: c for e, c in self._terms.items() if e[0] + e[1] <= max_total_degree}
        )

    def specialize(self, t_value) -> dict[Exponent, Fraction | int]:
        """Evaluate every coefficient at ``t = t_value``; zero results are dropped."""
        if not isinstance(t_value, Rational):
            raise TypeError("t_value must be an exact rational (int or Fraction)")
        out = {}
        for e, c in self.items():
            v = c(t_value)
            if v != 0:
                out[e] = v
        return out

    def min_exponents(self) -> tuple[int, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return (min(e[0] for e in self._terms), min(e[1] for e in self._terms))

    def leading_term(self) -> tuple[Exponent, CoeffPoly]:
        """Largest term in graded-lex order (total degree, then x-degree)."""
        e = max(self._terms, key=_graded_key)
        return e, self._terms[e]

    def exact_div(self, denominator: LaurentPoly) -> LaurentPoly:
        """Return ``q`` with ``q * denominator == self``.

        Long division in graded-lex order. Raises :class:`NotDivisible` if
        no exact quotient exists.
        """
        if denominator.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        den = denominator._terms
        (dm, dn), dlead = denominator.leading_term()
        # quotient exponents are confined to a box: per coordinate, the
        # extreme exponents of a product are sums of the factors' extremes
        num_m = [e[0] for e in self._terms]
        num_n = [e[1] for e in self._terms]
        den_m = [e[0] for e in den]
        den_n = [e[1] for e in den]
        m_lo, m_hi = min(num_m) - min(den_m), max(num_m) - max(den_m)
        n_lo, n_hi = min(num_n) - min(den_n), max(num_n) - max(den_n)

        rem = dict(self._terms)
        quot: dict[Exponent, CoeffPoly] = {}
        while rem:
            e = max(rem, key=_graded_key)
            qe = Exponent(e[0] - dm, e[1] - dn)
            if not (m_lo <= qe[0] <= m_hi and n_lo <= qe[1] <= n_hi):
                raise NotDivisible("nonzero remainder in exact division")
            try:
                qc = rem[e].exact_div(dlead)
            except NotDivisible:
                raise NotDivisible("leading coefficient does not divide") from None
            quot[qe] = qc
            for (m, n), c in den.items():
                key = Exponent(m + qe[0], n + qe[1])
                v = rem.get(key, ZERO_C) - c * qc
                if v:
                    rem[key] = v
                else:
                    rem.pop(key, None)
        return LaurentPoly._raw(quot)

    __truediv__ = exact_div

    # -- serialization ----------------------------------------------------
    def to_records(self) -> list[dict]:
        """Sorted list of ``{"m", "n", "coeffs"}`` records."""
        return [
            {"m": e.m, "n": e.n, "coeffs": list(c.coeffs)} for e, c in self.items()
        ]

    @classmethod
    def from_records(cls, records: Iterable[Mapping]) -> LaurentPoly:
        return cls(((r["m"], r["n"]), list(r["coeffs"])) for r in records)


def lp_sum(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    """Sum many polynomials with a single accumulator."""
    acc: dict[tuple[int, int], list[int]] = {}
    for p in polys:
        for e, c in p._terms.items():
            slot = acc.setdefault(e, [])
            accumulate(slot, c.coeffs)
    return LaurentPoly.from_accumulator(acc)


def accumulate(slot: list[int], coeffs: tuple[int, ...]) -> None:
    """In-place ``slot += coeffs`` for coefficient lists."""
    if len(slot) < len(coeffs):
        slot.extend([0] * (len(coeffs) - len(slot)))
    for i, v in enumerate(coeffs):
        slot[i] += v


def truncated_product(factors: Iterable[LaurentPoly], max_total_degree: int) -> LaurentPoly:
    """Product of ``factors`` truncated after each step at ``max_total_degree``."""
    result = LaurentPoly.one().truncate(max_total_degree)
    for f in factors:
        result = (result * f.truncate(max_total_degree)).truncate(max_total_degree)
    return result
