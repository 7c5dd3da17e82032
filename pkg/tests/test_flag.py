from fractions import Fraction as F

import pytest

from inertia import InputError, UnsupportedError, gamma_flag, root_system_data, special_classes
from inertia.flag import _cartan_of, _to_coroot, cartan_matrix, classify_cartan, root_count, weyl_orbit, weyl_order

SMALL = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("D", 4), ("G", 2)]
ALL = SMALL + [("A", 5), ("B", 4), ("C", 4), ("D", 5), ("F", 4), ("E", 6), ("E", 7), ("E", 8)]

COXETER = {"A": lambda n: n + 1, "B": lambda n: 2 * n, "C": lambda n: 2 * n, "D": lambda n: 2 * n - 2}
COXETER_EXC = {("G", 2): 6, ("F", 4): 12, ("E", 6): 12, ("E", 7): 18, ("E", 8): 30}


def test_g2_cartan_and_marks():
    assert cartan_matrix("G", 2) == [[2, -3], [-1, 2]]
    R = root_system_data("G2")
    assert R.marks == (3, 2)
    assert len(R.all_roots) == 12 and R.weyl_order == 12


@pytest.mark.parametrize("family, rank", ALL)
def test_root_counts_and_coxeter_numbers(family, rank):
    R = root_system_data(family, rank)
    assert len(R.all_roots) == root_count(family, rank)
    h = COXETER_EXC.get((family, rank)) or COXETER[family](rank)
    # h = 1 + sum of marks = number of roots / rank
    assert 1 + sum(R.marks) == h
    assert len(R.all_roots) == h * rank
    assert all(c > 0 for c in R.marks)


@pytest.mark.parametrize("family, rank", SMALL)
def test_weyl_order_by_orbit_enumeration(family, rank):
    R = root_system_data(family, rank)
    h = 1 + sum(R.marks)
    # an interior point of the alcove has trivial stabilizer
    y = _to_coroot(R, [F(1, 2 * h)] * rank)
    assert len(weyl_orbit(R, y)) == weyl_order(family, rank)


@pytest.mark.parametrize("family, rank", ALL)
def test_centralizers_of_alcove_vertices(family, rank):
    R = root_system_data(family, rank)
    T = special_classes(R)
    assert len(T.entries) == rank + 1
    for c in T.entries:
        assert c.centralizer_semisimple
        assert c.component_count * c.centralizer_weyl_order == R.weyl_order
        assert sum(r for _, r in classify_cartan(_cartan_of(R, list(c.centralizer_roots)))) == rank


def test_g2_classes():
    T = special_classes(root_system_data("G2"))
    rows = [(c.adjoint_order, c.centralizer_type, c.centralizer_name, c.component_count) for c in T.entries]
    assert sorted(rows) == [(1, "G2", "G2", 1), (2, "A1xA1", "SO(4)", 3), (3, "A2", "SU(3)", 2)]


def test_g2_generated_group():
    G = gamma_flag(root_system_data("G2"))
    assert G.invariant_factors == (2, 6)
    assert G.order == 12 and G.describe() == "Z2 x Z6"
    assert G.stabilizer_count == 6
    assert len(G.finite_stabilizers) == 6 and len(G.elements) == 12


def test_b2_has_the_so4_class():
    T = special_classes(root_system_data("B2"))
    so4 = [c for c in T.entries if c.centralizer_name == "SO(4)"]
    assert len(so4) == 1 and so4[0].component_count == 2 and so4[0].adjoint_order == 2


def test_a1():
    T = special_classes(root_system_data("A1"))
    assert [(c.centralizer_type, c.component_count) for c in T.entries] == [("A1", 1), ("A1", 1)]
    G = gamma_flag(root_system_data("A1"))
    assert G.describe() == "Z2" and G.stabilizer_count == 2


def test_big_groups_are_not_enumerated():
    G = gamma_flag(root_system_data("F4"))
    assert G.order == 5184 and G.elements is None
    assert G.stabilizer_count == 72


@pytest.mark.parametrize("text", ["X2", "A0x", "Z3", "G3", "B1"])
def test_bad_types(text):
    with pytest.raises((InputError, UnsupportedError)):
        root_system_data(text)
