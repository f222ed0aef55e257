from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gkm import lattice
from gkm.chern import LocalizationError, chern_data, equivariant_chern, chern_numbers, integrate, localize, todd
from gkm.classify import case_weights
from gkm.polyring import variables
from gkm.cohomology import EquivariantClass, class_basis, class_from_strings

from conftest import A, B, catalog_graphs, unimodular

GRAPHS = catalog_graphs()
GOLDEN = {"P1": (64, 24, 4), "Q1": (54, 24, 4), "P3": (0, 0, 4), "P2": (-8, 0, 4), "Q2": (-2, 0, 4),
          "S0": (0, 0, 4), "S1": (0, 0, 4), "S2": (0, 0, 4), "S6": (0, 0, 2)}
TODD = {"P1": 1, "Q1": 1, "P2": 0, "P3": 0, "Q2": 0, "S0": 0, "S1": 0, "S2": 0}


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_goldens(name):
    assert chern_numbers(GRAPHS[name]) == GOLDEN[name]


@pytest.mark.parametrize("name", sorted(TODD))
def test_todd(name):
    assert todd(GRAPHS[name]) == TODD[name]


def test_report_strings():
    assert chern_data(GRAPHS["Q1"]).to_dict() == {"c1^3": "54", "c1c2": "24", "c3": "4", "todd": "1"}


@pytest.mark.parametrize("a,expect", [(1, 70), (4, 40), (5, 22), (2, 64)])
def test_circle_case_c(a, expect):
    c13, c1c2, c3 = chern_numbers(case_weights("C", a=a))
    assert (c13, c1c2, c3) == (expect, 24, 4)


@given(st.sampled_from(sorted(GRAPHS)), st.sampled_from([0, 2, 4]),
       st.lists(st.integers(-5, 5), min_size=12, max_size=12))
def test_low_degree_integrals_vanish(name, d, coeffs):
    g = GRAPHS[name]
    c = EquivariantClass.constant(g, 0)
    for k, x in zip(coeffs, class_basis(g, d)):
        c = c + k * x
    assert integrate(g, c) == 0


@given(st.sampled_from(sorted(GRAPHS)), unimodular())
def test_gl_invariance(name, psi):
    g = GRAPHS[name]
    assert chern_numbers(g.map_weights(psi)) == GOLDEN[name]
    assert chern_numbers(g.renamed({v: v + "'" for v in g.vertices})) == GOLDEN[name]


def test_top_degree_point_class():
    # the class supported at one vertex with value its Euler class integrates to 1
    g = GRAPHS["P2"]
    from gkm.chern import euler_class
    vals = {v: 0 for v in g.vertices}
    vals["p1"] = euler_class(g, "p1")
    assert integrate(g, EquivariantClass(g, vals)) == 1


def test_non_class_has_pole():
    g = GRAPHS["S6"]
    with pytest.raises(LocalizationError):
        localize(g, class_from_strings(g, {"n": "1", "s": "0"}))


def test_non_constant_integral_rejected():
    g = GRAPHS["P2"]
    c1 = equivariant_chern(g, 1)
    t1 = variables(2)[0]
    assert localize(g, c1 * c1 * c1 * t1) == -8 * t1
    with pytest.raises(LocalizationError):
        integrate(g, c1 * c1 * c1 * t1)


def test_fractional_result_detected():
    g = GRAPHS["P2"]
    c = EquivariantClass(g, {v: 0 for v in g.vertices})
    from gkm.chern import euler_class
    c.values["p1"] = euler_class(g, "p1") * Fraction(1, 2)
    assert integrate(g, c) == Fraction(1, 2)
    with pytest.raises(LocalizationError):
        integrate(g, c, expect_integer=True)
