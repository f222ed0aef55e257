import os

import pytest

from gkm import lattice
from gkm.constructions import (AmbiguousConnection, ConstructionError, blowup_edge, blowup_vertex, catalog,
                               glue_parameter, glue_s6)
from gkm.chern import chern_numbers
from gkm.graph import Edge, GkmGraph, connections_along, isomorphic, load, validate

from conftest import A, B, FIXTURES


def s6(a=A, b=B):
    return catalog("S6", a, b)


def _multisets(g):
    return sorted(sorted(map(tuple, g.weights(v))) for v in g.vertices)


def test_catalog_weights():
    a, b = lattice.Weight(A), lattice.Weight(B)
    q2 = [[-a, a - b, a + b], [-b, b - a, a + b], [a, b - a, -a - b], [b, a - b, -a - b]]
    assert _multisets(catalog("Q2", A, B)) == sorted(sorted(map(tuple, m)) for m in q2)
    s1 = catalog("S", A, B, k=1)
    assert sorted([(0, 1), (-1, -2), (1, 1)]) in _multisets(s1)
    g = catalog("S6", A, B)
    assert len(g.vertices) == 2
    assert sorted(map(tuple, (e.weight for e in g.edges))) == [(0, 1), (1, 0), (1, 1)]


def test_catalog_rejects_bad_params():
    with pytest.raises(ValueError):
        catalog("P2", (1, 0), (2, 0))
    with pytest.raises(ValueError):
        catalog("XX", A, B)


def test_blowup_vertex_s6_is_p2():
    g = blowup_vertex(s6(), "n")
    assert validate(g, check_effective=True).valid
    assert isomorphic(g, catalog("P2", A, B)) is not None


def test_blowup_vertex_counts():
    g = catalog("P1", A, B, c=(1, 1))
    h = blowup_vertex(g, "p1")
    assert len(h.vertices) == 6 and len(h.edges) == 9
    assert validate(h).valid


def test_blowup_edge_s6_is_q2():
    g = s6()
    edge = next(e for e in g.edges if sorted(map(abs, e.weight)) == [1, 1])
    h = blowup_edge(g, edge.id)
    assert validate(h, check_effective=True).valid
    assert isomorphic(h, catalog("Q2", A, B)) is not None


def test_blowup_edge_other_edges_are_not_q2():
    g = s6()
    for e in g.edges:
        if tuple(e.weight) != (1, 1):
            assert isomorphic(blowup_edge(g, e.id), catalog("Q2", A, B)) is None


def test_blowup_edge_needs_connection_when_ambiguous():
    g = load(os.path.join(FIXTURES, "two_connections.json"))
    with pytest.raises(AmbiguousConnection):
        blowup_edge(g, "e1")
    # with a choice supplied the construction proceeds; here u2 - u1 = w, so it
    # stops at the independence check of the new vertex instead
    for conn in [0, 1, connections_along(g, "e1")[1]]:
        with pytest.raises(ConstructionError, match="parallel"):
            blowup_edge(g, "e1", conn)


def test_blowup_edge_q1_every_edge():
    g = catalog("Q1", A, B)
    for e in g.edges:
        h = blowup_edge(g, e.id)
        assert validate(h, check_effective=True).valid
        assert len(h.vertices) == 6


def test_blowup_vertex_p1_every_vertex():
    g = catalog("P1", A, B, c=(1, 1))
    for v in g.vertices:
        assert validate(blowup_vertex(g, v)).valid


def test_blowup_vertex_independence_witness():
    g = GkmGraph(2, ["n", "s"], [Edge("e1", "n", "s", (1, 0)), Edge("e2", "n", "s", (0, 1)),
                                 Edge("e3", "n", "s", (2, -1))])
    with pytest.raises(ConstructionError, match="parallel") as info:
        blowup_vertex(g, "n")
    assert info.value.witness["weights"] in ([[-1, 1], [1, -1]], [[1, -1], [-1, 1]])


def test_euler_counts_and_chern():
    g = s6()
    bv = blowup_vertex(g, "n")
    be = blowup_edge(g, next(e.id for e in g.edges if tuple(e.weight) == (1, 1)))
    assert chern_numbers(bv) == (-8, 0, 4)
    assert chern_numbers(be) == (-2, 0, 4)
    assert chern_numbers(glue_s6(g, g))[2] == 4
    q1 = catalog("Q1", A, B)
    assert chern_numbers(blowup_edge(q1, q1.edges[0].id))[2] == chern_numbers(q1)[2] + 2


@pytest.mark.parametrize("k", [0, 1, 2])
def test_glue_reproduces_s(k):
    s = lattice.Weight(A) + lattice.Weight(B)
    c, d = lattice.Weight(A) - k * s, lattice.Weight(B) + k * s
    assert glue_parameter(A, B, c, d) == k
    h = glue_s6(s6(), s6(c, d))
    assert validate(h, check_effective=True).valid
    assert isomorphic(h, catalog("S", A, B, k=k)) is not None


def test_glue_rejects_mismatched_cut():
    with pytest.raises(ConstructionError):
        glue_s6(s6(), s6((1, 0), (1, 1)))


def test_glue_needs_s6_shape():
    with pytest.raises(ConstructionError):
        glue_s6(catalog("P2", A, B), s6())
