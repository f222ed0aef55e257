import io
import json
import os
import subprocess
import sys

import pytest

from gkm.cli import run
from gkm.constructions import catalog
from gkm.graph import GkmGraph, isomorphic

from conftest import FIXTURES

Q1 = '{"a":[1,0],"b":[0,1]}'


def call(argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def doc(out):
    d = json.loads(out)
    assert d["schema"] == "gkm-report/1"
    return d


def test_catalog_pipe_chern(monkeypatch):
    code, out, err = call(["catalog", "Q1", "--params", Q1])
    assert code == 0 and "Q1" in err
    code, out, _ = call(["chern", "-"], stdin=out, monkeypatch=monkeypatch)
    assert code == 0
    d = doc(out)
    assert (d["c1^3"], d["c1c2"], d["c3"], d["todd"]) == ("54", "24", "4", "1")


@pytest.mark.parametrize("kind,params", [("P1", '{"a":[1,0],"b":[0,1],"c":[1,1]}'), ("P2", Q1),
                                         ("S", '{"a":[1,0],"b":[0,1],"k":1}'), ("S6", Q1)])
def test_catalog_validates(kind, params, monkeypatch):
    _, out, _ = call(["catalog", kind, "--params", params])
    code, out, _ = call(["validate", "-", "--effective"], stdin=out, monkeypatch=monkeypatch)
    assert code == 0 and doc(out)["valid"]


def test_malformed_is_usage_error(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"torus_rank": 2, "vertices": ["p"]')
    code, out, err = call(["validate", str(p)])
    assert code == 2 and doc(out)["kind"] == "usage"
    p.write_text('{"torus_rank": 2, "vertices": ["p"], "edges": [], "extra": 0}')
    assert call(["validate", str(p)])[0] == 2
    assert call(["validate", str(tmp_path / "missing.json")])[0] == 2


def test_invalid_graph_is_domain_error(tmp_path):
    p = tmp_path / "g.json"
    p.write_text(json.dumps({"torus_rank": 2, "vertices": ["p", "q"], "edges": [
        {"id": "e1", "from": "p", "to": "q", "weight": [1, 0]},
        {"id": "e2", "from": "p", "to": "q", "weight": [2, 0]}]}))
    code, out, err = call(["validate", str(p)])
    assert code == 1
    assert not doc(out)["independence"]["ok"]


def test_usage_errors():
    assert call(["bogus"])[0] == 2
    assert call(["catalog", "Q1", "--params", "{not json"])[0] == 2
    assert call(["catalog", "XX", "--params", Q1])[0] == 2
    assert call(["chern"])[0] == 2


def test_domain_error_from_construction(tmp_path):
    p = tmp_path / "s6.json"
    p.write_text(catalog("S6", (1, 0), (0, 1)).to_json())
    code, out, _ = call(["blowup-vertex", str(p), "--vertex", "zz"])
    assert code == 2 and "zz" in doc(out)["message"]
    code, out, _ = call(["catalog", "P2", "--params", '{"a":[1,0],"b":[2,0]}'])
    assert code == 1 and doc(out)["kind"] == "domain"


def test_classify_case_a():
    code, out, err = call(["classify", "--weights", os.path.join(FIXTURES, "caseA.json")])
    assert code == 0
    d = doc(out)
    assert d["count"] == 1
    g = GkmGraph.from_dict(d["graphs"][0])
    assert isomorphic(g, catalog("P1", (1, 0), (0, 1), c=(1, 1))) is not None


def test_surgeries_and_aut(tmp_path, monkeypatch):
    p = tmp_path / "s6.json"
    p.write_text(catalog("S6", (1, 0), (0, 1)).to_json())
    code, out, _ = call(["blowup-vertex", str(p), "--vertex", "n"])
    assert code == 0
    assert isomorphic(GkmGraph.from_dict(doc(out)["graph"]), catalog("P2", (1, 0), (0, 1))) is not None
    code, out, _ = call(["aut", "-", "--star"], stdin=out, monkeypatch=monkeypatch)
    assert code == 0 and doc(out)["aut"]["order"] == 6
    code, out, _ = call(["blowup-edge", str(p), "--edge", "e3"])
    assert code == 0
    code, out, _ = call(["glue", str(p), str(p)])
    assert code == 0
    assert isomorphic(GkmGraph.from_dict(doc(out)["graph"]), catalog("S", (1, 0), (0, 1), k=0)) is not None


def test_cohomology_and_integrate(tmp_path):
    g = catalog("P2", (1, 0), (0, 1))
    p = tmp_path / "p2.json"
    p.write_text(g.to_json())
    code, out, _ = call(["cohomology", str(p), "--max-degree", "6"])
    d = doc(out)
    assert code == 0 and d["ordinary_betti"] == {"0": 1, "1": 0, "2": 1, "3": 0, "4": 1, "5": 0, "6": 1}
    assert d["equivariant_ranks"] == {"0": 1, "2": 3, "4": 6, "6": 10}
    pres = tmp_path / "pres.json"
    pres.write_text(json.dumps({"params": {"a": [1, 0], "b": [0, 1]},
                                "generators": {"xi": {"p1": "0", "p2": "a", "p3": "b", "p4": "-a-b"}},
                                "relations": ["xi*(xi-a)*(xi-b)*(xi+a+b)"]}))
    code, out, _ = call(["cohomology", str(p), "--max-degree", "8", "--presentation", str(pres)])
    assert code == 0 and doc(out)["presentation"]
    code, out, _ = call(["integrate", str(p), "--class", "c1^3"])
    assert code == 0 and doc(out)["integral"] == "-8"
    xi = tmp_path / "xi.json"
    xi.write_text(json.dumps({"params": {"a": [1, 0], "b": [0, 1]},
                              "table": {"p1": "0", "p2": "a", "p3": "b", "p4": "-a-b"}}))
    code, out, _ = call(["integrate", str(p), "--class", "x^3", "--define", f"x={xi}"])
    assert code == 0 and doc(out)["integral"] in ("1", "-1")
    assert call(["integrate", str(p), "--class", "c1^3", "--define", "oops"])[0] == 2


def test_oct_check():
    code, out, err = call(["oct", "check", "--samples", "5"])
    d = doc(out)
    assert code == 0 and d["ok"]
    assert d["checks"]["printed_pair_rule_has_left_identity"] is False


def test_byte_stable():
    a = call(["catalog", "S", "--params", '{"a":[1,0],"b":[0,1],"k":2}'])[1]
    b = call(["catalog", "S", "--params", '{"a":[1,0],"b":[0,1],"k":2}'])[1]
    assert a == b


def test_module_entry_point_pipeline():
    env = dict(os.environ)
    first = subprocess.run([sys.executable, "-m", "gkm", "catalog", "Q1", "--params", Q1],
                           capture_output=True, text=True, env=env, check=True)
    second = subprocess.run([sys.executable, "-m", "gkm", "chern", "-"], input=first.stdout,
                            capture_output=True, text=True, env=env)
    assert second.returncode == 0
    assert json.loads(second.stdout)["c1^3"] == "54"
