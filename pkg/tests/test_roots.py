import pytest

from g2tokuyama.roots import build_a2_datum, build_g2_datum, weyl_dimension, weyl_group_elements

from oracles import weyl_dimension_g2

G2 = build_g2_datum()
A2 = build_a2_datum()


def test_g2_positive_roots():
    assert set(G2.positive_roots) == {(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)}
    assert G2.rho == (5, 3)


def test_a2_datum():
    assert set(A2.positive_roots) == {(1, 0), (0, 1), (1, 1)}
    assert A2.rho == (1, 1)
    assert A2.cartan == ((2, -1), (-1, 2))


@pytest.mark.parametrize("datum", [G2, A2], ids=["G2", "A2"])
def test_simple_reflections_permute_roots(datum):
    roots = set(datum.all_roots)
    for w in weyl_group_elements(datum):
        assert {w.apply(r) for r in roots} == roots


def test_weyl_group_orders_and_signs():
    g2 = weyl_group_elements(G2)
    a2 = weyl_group_elements(A2)
    assert len(g2) == 12 and len(a2) == 6
    assert sum(w.sign for w in g2) == 0 and sum(w.sign for w in a2) == 0
    longest = max(g2, key=lambda w: w.length)
    assert longest.length == 6
    assert longest.matrix == ((-1, 0), (0, -1))


def test_fundamental_weights():
    assert G2.to_root_coords((1, 0)) == (2, 1)
    assert G2.to_root_coords((0, 1)) == (3, 2)
    assert G2.coroot_pairing((2, 1), (1, 0)) == 1
    assert G2.coroot_pairing((2, 1), (0, 1)) == 0


def test_weyl_dimension_values():
    assert weyl_dimension(G2, (0, 0)) == 1
    assert weyl_dimension(G2, (1, 0)) == 7
    assert weyl_dimension(G2, (0, 1)) == 14
    assert weyl_dimension(G2, (7, 7)) == 262144
    assert weyl_dimension(A2, (1, 1)) == 8


@pytest.mark.parametrize("l1", range(7))
def test_weyl_dimension_against_independent_formula(l1):
    for l2 in range(7):
        assert weyl_dimension(G2, (l1, l2)) == weyl_dimension_g2(l1, l2)
