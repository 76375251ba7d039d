import pytest

from gradedpi.errors import GroupAxiomError
from gradedpi.groups import cyclic_group, group_from_table, symmetric_group, trivial_group

from oracles import brute_force_element_orders


def test_trivial_group():
    g = cyclic_group(1)
    assert g.order == 1
    assert g.identity == 0
    assert g.elt_order == (1,)


def test_cyclic_two():
    g = cyclic_group(2)
    assert g.elt_order == (1, 2)
    assert g.inv(1) == 1
    assert g.mul(1, 1) == 0


def test_cyclic_six_orders_match_brute_force():
    g = cyclic_group(6)
    assert list(g.elt_order) == brute_force_element_orders(g.table, g.identity)
    assert g.elt_order == (1, 6, 3, 2, 3, 6)


def test_group_from_table_z2():
    g = group_from_table(["e", "a"], [[0, 1], [1, 0]])
    assert g.identity == 0
    assert g.inv(1) == 1


def test_group_from_table_missing_inverse():
    with pytest.raises(GroupAxiomError, match="no inverse for element 1"):
        group_from_table(["e", "a"], [[0, 1], [1, 1]])


def test_group_from_table_non_associative():
    # a quasigroup table without associativity
    table = [[0, 1, 2], [1, 2, 0], [2, 1, 0]]
    with pytest.raises(GroupAxiomError):
        group_from_table(["e", "a", "b"], table)


def test_group_from_table_bad_shape():
    with pytest.raises(GroupAxiomError, match="must be 2x2"):
        group_from_table(["e", "a"], [[0, 1]])
    with pytest.raises(GroupAxiomError, match="out of range"):
        group_from_table(["e", "a"], [[0, 1], [1, 5]])


def test_symmetric_three():
    g = symmetric_group(3)
    assert g.order == 6
    assert sorted(g.elt_order) == [1, 2, 2, 2, 3, 3]
    assert list(g.elt_order) == brute_force_element_orders(g.table, g.identity)
    assert not g.is_abelian()


def test_symmetric_group_closure_and_inverses():
    g = symmetric_group(4)
    for a in g.elements():
        assert g.mul(a, g.inv(a)) == g.identity
        assert g.power(a, g.elt_order[a]) == g.identity


def test_order_cap():
    with pytest.raises(GroupAxiomError, match="exceeds the configured cap"):
        cyclic_group(65)
    assert cyclic_group(65, max_order=128).order == 65


def test_index_lookup():
    g = symmetric_group(3)
    for i in g.elements():
        assert g.index(g.label(i)) == i
    with pytest.raises(GroupAxiomError, match="unknown group element label"):
        g.index("nope")


def test_trivial_group_helper():
    assert trivial_group().order == 1
