import pytest
from hypothesis import given, strategies as st

from gkm import lattice
from gkm.cohomology import EquivariantClass, class_basis, is_class
from gkm.constructions import catalog
from gkm.symmetry import (act_on_class, aut_star, check_group, gkm_automorphisms, induced_action,
                          ordinary_basis)

from conftest import A, B, catalog_graphs

GRAPHS = catalog_graphs()
GROUPS = {name: gkm_automorphisms(g) for name, g in GRAPHS.items() if name != "S2"}


def test_orders():
    assert {k: GROUPS[k].order for k in ["P1", "P2", "P3", "Q1", "Q2", "S0", "S1"]} == \
        {"P1": 8, "P2": 6, "P3": 8, "Q1": 8, "Q2": 8, "S0": 8, "S1": 4}


def test_p1_standard_torus():
    # with a, b, c a basis of Z^3 the full symmetric group of the tetrahedron survives
    g = catalog("P1", (1, 0, 0), (0, 1, 0), c=(0, 0, 1))
    assert gkm_automorphisms(g).order == 24


@pytest.mark.parametrize("name", sorted(GROUPS))
def test_group_axioms(name):
    grp = GROUPS[name]
    assert check_group(grp.elements)
    assert all(abs(lattice.det([list(r) for r in a.psi])) == 1 for a in grp.elements)


@pytest.mark.parametrize("name", ["P2", "Q1", "S0"])
def test_automorphisms_preserve_classes(name):
    g = GRAPHS[name]
    for a in GROUPS[name].elements:
        for d in (2, 4):
            for c in class_basis(g, d):
                assert is_class(g, act_on_class(a, c))


@pytest.mark.parametrize("name", ["P2", "Q2", "S0", "S1"])
def test_induced_action_is_homomorphism(name):
    g = GRAPHS[name]
    els = GROUPS[name].elements
    for d in (2, 4):
        basis = ordinary_basis(g, d)
        mats = {a.key(): induced_action(g, a, d, basis) for a in els}
        for a in els:
            for b in els:
                assert mats[a.compose(b).key()] == lattice.matmul(mats[a.key()], mats[b.key()])


def test_aut_star_orders():
    assert aut_star(GRAPHS["S0"], GROUPS["S0"]).order == 4
    assert aut_star(GRAPHS["S1"], GROUPS["S1"]).order == 2


def _horizontal_reflection(name):
    return next(a for a in GROUPS[name].elements
                if [list(r) for r in a.psi] == [[-1, 0], [0, -1]] and a.cycles() == "(p1 p3)(p2 p4)")


@pytest.mark.parametrize("name", ["S0", "S1"])
def test_horizontal_reflection_negates_h2(name):
    g = GRAPHS[name]
    a = _horizontal_reflection(name)
    assert induced_action(g, a, 2) == [[-1]]
    assert a not in aut_star(g, GROUPS[name]).elements


def test_underdetermined_lattice_map():
    # rank-3 torus with weights spanning only a plane: psi is not pinned down
    from gkm.graph import Edge, GkmGraph
    from gkm.symmetry import UnderdeterminedError
    g = GkmGraph(3, ["n", "s"], [Edge("e1", "n", "s", (1, 0, 0)), Edge("e2", "n", "s", (0, 1, 0)),
                                 Edge("e3", "s", "n", (1, 1, 0))])
    with pytest.raises(UnderdeterminedError, match="underdetermined"):
        gkm_automorphisms(g)
