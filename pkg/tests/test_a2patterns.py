import itertools

import pytest

from g2tokuyama.a2patterns import (
    decorate_a2,
    enumerate_a2,
    pattern_monomial_a2,
    standard_contribution_a2,
    tokuyama_sum_a2,
    verify_tokuyama_a2,
)
from g2tokuyama.algebra import CoeffPoly
from g2tokuyama.characters import tokuyama_numerator
from g2tokuyama.g2patterns import BoundViolation, CirclingViolation
from g2tokuyama.roots import build_a2_datum, weyl_dimension

A2 = build_a2_datum()


def brute_force_a2(lam):
    l1, l2 = lam
    top = l1 + l2 + 2
    return {
        (a, b, c)
        for a, b, c in itertools.product(range(top + 1), repeat=3)
        if a >= b >= 0 and c >= 0 and b <= l1 and a <= l2 + b and c <= l1 + a - 2 * b
    }


def test_rho_patterns():
    # the eight patterns of the adjoint crystal with their contributions
    expected = {
        (0, 0, 0): [1],
        (1, 0, 0): [0, -1],
        (0, 0, 1): [0, -1],
        (1, 0, 1): [0, -1, 1],
        (1, 0, 2): [0, 0, 1],
        (1, 1, 0): [],
        (2, 1, 0): [0, 0, 1],
        (2, 1, 1): [0, 0, 0, -1],
    }
    got = {}
    for pi in enumerate_a2((1, 1)):
        got[tuple(pi)] = list(standard_contribution_a2(decorate_a2(pi, (1, 1))).coeffs)
    assert got == expected


def test_boxed_rendering():
    # the top-left entry of [1,0][2] sits at its bound a = l2 + b
    dec = decorate_a2((1, 0, 2), (1, 1))
    assert dec.boxed == (True, False, True)
    assert dec.render((1, 0, 2)) == "[_1,0°][_2]"


def test_decorate_errors():
    with pytest.raises(CirclingViolation):
        decorate_a2((0, 1, 0), (3, 3))
    with pytest.raises(BoundViolation):
        decorate_a2((3, 0, 0), (1, 1))


def test_monomial():
    assert pattern_monomial_a2((2, 1, 1)) == (2, 2)


@pytest.mark.parametrize("lam", [(0, 0), (1, 0), (0, 2), (2, 1), (3, 3)])
def test_enumeration(lam):
    pats = list(enumerate_a2(lam))
    assert len(pats) == len(set(pats)) == weyl_dimension(A2, lam)
    assert set(pats) == brute_force_a2(lam)


@pytest.mark.parametrize("theta", [(l1, l2) for l1 in range(5) for l2 in range(5)])
def test_tokuyama_identity(theta):
    assert tokuyama_sum_a2(theta) == tokuyama_numerator(A2, theta)


def test_verify_report():
    rep = verify_tokuyama_a2((0, 0))
    rec = rep.to_record()
    assert rec["equal"] and rec["counts"]["patterns"] == 8 and rec["counts"]["zero"] == 1
    # the xy coefficient of (1 - tx)(1 - ty)(1 - txy) is t^2 - t
    assert tokuyama_sum_a2((0, 0))[(1, 1)] == CoeffPoly((0, -1, 1))
