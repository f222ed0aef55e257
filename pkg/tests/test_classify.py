import json

import pytest

from gkm.classify import (CHERN_TABLE, WeightData, case_c_chern, case_weights, certificate_json,
                          distinctness_certificate, enumerate_graphs)
from gkm.constructions import catalog
from gkm.graph import isomorphic, validate
from gkm.lattice import Weight

a, b = Weight((1, 0)), Weight((0, 1))


@pytest.mark.parametrize("case,params,kind,args", [
    ("A", dict(a=a, b=b, c=a + b), "P1", dict(a=a, b=b, c=a + b)),
    ("B", dict(a=a, b=b), "Q1", dict(a=a + b, b=b)),
    ("E", dict(a=a, b=b), "P2", dict(a=a, b=a + b)),
    ("F", dict(a=a, b=b), "Q2", dict(a=a + b, b=a)),
])
def test_unique_graph(case, params, kind, args):
    found = enumerate_graphs(case_weights(case, **params))
    assert len(found) == 1
    assert isomorphic(found[0], catalog(kind, **args)) is not None


@pytest.mark.parametrize("k", [0, 1, 2])
def test_case_d_contains_s(k):
    found = enumerate_graphs(case_weights("D", a=a, b=b, k=k))
    assert any(isomorphic(g, catalog("S", a, b, k=k)) is not None for g in found)
    assert all(validate(g).valid for g in found)


def test_case_d_explicit_cd_matches_k():
    s = a + b
    via_k = enumerate_graphs(case_weights("D", a=a, b=b, k=1))
    via_cd = enumerate_graphs(case_weights("D", a=a, b=b, c=a - s, d=b + s))
    assert [g.to_dict() for g in via_k] == [g.to_dict() for g in via_cd]


def test_p3_weights_contain_p3():
    g = catalog("P3", a, b)
    found = enumerate_graphs(WeightData.from_graph(g))
    assert any(isomorphic(h, g) is not None for h in found)


def test_results_pairwise_non_isomorphic():
    found = enumerate_graphs(case_weights("D", a=a, b=b, k=0))
    for i, g in enumerate(found):
        for h in found[i + 1:]:
            assert isomorphic(g, h) is None


def test_deterministic():
    wd = case_weights("D", a=a, b=b, k=0)
    assert [g.to_json() for g in enumerate_graphs(wd)] == [g.to_json() for g in enumerate_graphs(wd)]


def test_gl_dedup_never_larger():
    wd = case_weights("D", a=a, b=b, k=0)
    assert len(enumerate_graphs(wd, dedup_gl=True)) <= len(enumerate_graphs(wd))


def test_weight_data_validation():
    with pytest.raises(ValueError):
        WeightData(2, (((1, 0), (2, 0), (0, 1)),))
    with pytest.raises(ValueError):
        case_weights("A", a=1, b=1, c=2)
    with pytest.raises(ValueError):
        case_weights("B", a=a, b=a + a)
    with pytest.raises(ValueError):
        case_weights("Z", a=1)
    wd = WeightData(1, (((1,), (-1,)),))
    assert WeightData.from_dict(json.loads(json.dumps(wd.to_dict()))) == wd


def test_certificate():
    cert = distinctness_certificate()
    assert cert["ok"] and cert["distinct"]
    for case, row in cert["cases"].items():
        assert (row["c1c2"], row["c1^3"]) == CHERN_TABLE[case]
    assert {a_: r["c1^3"] for a_, r in cert["case_C"].items()} == {1: 70, 2: 64, 3: 54, 4: 40, 5: 22}
    # case C with a = 2, 3 shares its Chern pair with cases A, B
    assert cert["case_C"][2]["coincides_with"] == ["A"]
    assert cert["case_C"][3]["coincides_with"] == ["B"]
    assert json.loads(certificate_json(cert))["ok"]


def test_case_c_formula():
    assert [case_c_chern(x)[1] for x in (1, 4, 5)] == [70, 40, 22]
