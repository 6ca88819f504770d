import pytest
import sympy
from hypothesis import given, strategies as st

from g2tokuyama.algebra import CoeffPoly, LaurentPoly, ONE_MINUS_T
from g2tokuyama.g2patterns import CirclingViolation, G2Pattern, decorate, hat_contribution, pattern_monomial
from g2tokuyama.gk import (
    CONE_1,
    CONE_2,
    EDGE_GENERATORS,
    EXPECTED_CORR,
    EXPECTED_VP,
    OUTSIDE,
    VectorPartition,
    audit_subcones,
    cone_coordinates,
    degree_counts,
    enumerate_circling,
    enumerate_partitions,
    generator_lattice_index,
    gk_lhs_series,
    gk_pattern_series,
    infinite_contribution,
    partition_sum_series,
    partition_to_pattern,
    pattern_to_partition,
    subcone_classify,
    subcone_name,
    triple_agreement,
)

from oracles import brute_force_circling, t, x, y

N = 12


@pytest.fixture(scope="module")
def patterns():
    return list(enumerate_circling(N))


def test_lattice_indices():
    assert generator_lattice_index(CONE_1) == 1
    assert generator_lattice_index(CONE_2) == 1
    assert generator_lattice_index(EDGE_GENERATORS) == 2


def test_enumeration_matches_brute_force():
    assert sorted(enumerate_circling(7)) == sorted(brute_force_circling(7))


def test_degree_counts_agree():
    pats, parts = degree_counts(N)
    assert pats == parts == [1, 2, 4, 7, 12, 19, 29, 42, 60, 83, 113, 150, 197]


def test_bijection_round_trip(patterns):
    images = set()
    for pi in patterns:
        xi = pattern_to_partition(pi)
        assert partition_to_pattern(xi) == pi
        assert xi.monomial == tuple(pattern_monomial(pi))
        images.add(xi)
    assert images == set(enumerate_partitions(N))


def test_cones_agree_on_shared_face(patterns):
    for pi in patterns:
        a, b, c, d, e, f = pi
        if c != b + d:
            continue
        k = cone_coordinates(pi)
        # on the face both expansions have a zero v3 / v3' coefficient
        assert k.get("v3", 0) == 0 and k.get("v3p", 0) == 0


@given(st.tuples(*[st.integers(0, 6)] * 6))
def test_partition_round_trip(mult):
    xi = VectorPartition(mult)
    pi = partition_to_pattern(xi)
    assert G2Pattern(*pi).satisfies_circling()
    assert pattern_to_partition(pi) == xi


def test_bijection_examples():
    assert pattern_to_partition((1, 1, 1, 0, 0, 0)).as_dict() == {"alpha4": 1}
    assert pattern_to_partition((1, 1, 2, 1, 1, 0)).as_dict() == {"alpha3": 1, "alpha3p": 1}
    for b in range(1, 5):
        xi = VectorPartition.from_dict({"alpha2": b, "alpha4": 1, "alpha5": b})
        assert partition_to_pattern(xi) == (2 * b + 1, b + 1, 2 * b + 1, b, 0, 0)


def test_cone_coordinates_reject_invalid():
    with pytest.raises(CirclingViolation):
        cone_coordinates((0, 1, 0, 0, 0, 0))


def sympy_lhs_coefficient(m, n):
    """Coefficient of x^m y^n in prod (1 - t x^a) / (1 - x^a), by sympy series."""
    roots = [(0, 1), (1, 0), (1, 1), (2, 1), (3, 1), (3, 2)]
    expr = 1
    for u, v in roots:
        geometric = sum(x ** (k * u) * y ** (k * v) for k in range(m + n + 1))
        expr *= (1 - t * x**u * y**v) * geometric
    poly = sympy.Poly(sympy.expand(expr), x, y)
    return sympy.Poly(poly.coeff_monomial(x**m * y**n), t).all_coeffs()[::-1]


def test_lhs_low_coefficients():
    lhs = gk_lhs_series(6)
    assert lhs[(1, 0)] == ONE_MINUS_T
    assert lhs[(1, 1)] == CoeffPoly((2, -3, 1))
    for m, n in [(2, 1), (3, 1), (2, 2)]:
        assert list(lhs[(m, n)].coeffs) == sympy_lhs_coefficient(m, n)


def test_triple_agreement():
    rec = triple_agreement(N)
    assert rec["equal"] and rec["lhs_eq_partitions"] and rec["lhs_eq_patterns"]
    assert gk_lhs_series(N) == partition_sum_series(N) == gk_pattern_series(N)


def test_standard_contributions_alone_fail():
    # the corrections are needed: the uncorrected sum differs
    from g2tokuyama.g2patterns import standard_contribution

    acc = LaurentPoly()
    for pi in enumerate_circling(6):
        acc = acc + LaurentPoly({tuple(pattern_monomial(pi)): standard_contribution(pi, decorate(pi))})
    assert acc != gk_lhs_series(6)


@pytest.mark.parametrize("b", [1, 2, 3])
def test_odd_v4_monomial_accounting(b):
    a = 2 * b + 1
    pats = [(a, a, a, 0, 0, 0), (1 + b, 1 + b, 1 + 2 * b, b, b, 0), (2 * b + 1, b + 1, 2 * b + 1, b, 0, 0)]
    got = [infinite_contribution(p) for p in pats]
    assert got == [ONE_MINUS_T ** 2, ONE_MINUS_T ** 2, CoeffPoly((1, -3, 4, -2))]
    assert {tuple(pattern_monomial(p)) for p in pats} == {(4 * b + 2, 2 * b + 1)}
    total = got[0] + got[1] + got[2]
    assert total == CoeffPoly((3, -7, 6, -2))
    wanted = sum((ONE_MINUS_T ** pattern_to_partition(p).index for p in pats), CoeffPoly(()))
    assert total == wanted


def test_subcone_examples():
    assert subcone_classify((1, 1, 1, 0, 0, 0)) == frozenset({4})
    assert subcone_classify((0, 0, 0, 0, 0, 0)) == frozenset()
    assert subcone_classify((1, 1, 2, 1, 1, 0)) == frozenset({6})
    for b in range(1, 4):
        assert subcone_classify((2 * b + 1, b + 1, 2 * b + 1, b, 0, 0)) == frozenset({2, 4, 5})
    assert subcone_classify((1, 1, 2, 0, 0, 0)) == OUTSIDE
    assert subcone_name(frozenset({6, 2, 4})) == "246"


def test_outside_face_contribution_is_partition_weight(patterns):
    for pi in patterns:
        if subcone_classify(pi) == OUTSIDE:
            assert infinite_contribution(pi) == ONE_MINUS_T ** pattern_to_partition(pi).index


@pytest.fixture(scope="module")
def audit():
    return audit_subcones(16)


def test_audit_marks(audit):
    assert audit.marks("vp") == EXPECTED_VP
    assert audit.marks("corr") == EXPECTED_CORR
    assert not any(audit.outside.values())


def test_audit_witnesses(audit):
    for row in ("vp", "corr"):
        for name in audit.marks(row):
            pi = audit.witnesses[f"{row}:{name}"]
            assert subcone_name(subcone_classify(pi) - {1}) == name


def test_audit_corrected_row(audit):
    # after correction the disagreement with the partition weight is confined to vp and corr cells
    assert audit.marks("vp_hat") <= EXPECTED_VP | EXPECTED_CORR


def test_audit_record_and_render(audit):
    rec = audit.to_record()
    assert rec["schema"] == 1 and rec["max_degree"] == 16
    assert {c for c, v in rec["vp"].items() if v} == EXPECTED_VP
    table = audit.render()
    assert table.splitlines()[1].startswith("vp")
