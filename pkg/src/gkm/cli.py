"""Command-line front end: one JSON report on stdout, a summary on stderr.

Exit codes: 0 success, 1 domain error, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import chern, classify, cohomology, constructions, octonion, symmetry
from .graph import GkmGraph, MalformedGraphError, validate
from .polyring import evaluate, linear_form, parse_polynomial

SCHEMA = "gkm-report/1"


class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


def _read(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _json(path):
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def _graph(path) -> GkmGraph:
    """A bare graph document, or any report carrying one under "graph"."""
    d = _json(path)
    if isinstance(d, dict) and "schema" in d and isinstance(d.get("graph"), dict):
        d = d["graph"]
    try:
        return GkmGraph.from_dict(d)
    except (MalformedGraphError, KeyError, TypeError, ValueError, AttributeError) as exc:
        raise UsageError(f"{path}: malformed graph: {exc}") from None


def _report(kind, body):
    return {"schema": SCHEMA, "report": kind, **body}


def _graph_report(g, kind):
    return _report(kind, {"graph": g.to_dict()})


# --- subcommands; each returns (report, summary line) ---

def cmd_validate(args):
    g = _graph(args.file)
    rep = validate(g, check_effective=args.effective)
    body = rep.to_dict()
    if not rep.valid:
        raise DomainError(json.dumps(_report("validate", body), sort_keys=True), "graph is not a valid GKM graph")
    return _report("validate", body), f"valid GKM graph: {len(g.vertices)} vertices, {len(g.edges)} edges"


def cmd_cohomology(args):
    g = _graph(args.file)
    D = args.max_degree
    if D < 0:
        raise UsageError("--max-degree must be nonnegative")
    hs = cohomology.hilbert_series(g, D)
    po = cohomology.ordinary_poincare(g, D)
    # ranks keyed by cohomological degree
    body = {"equivariant_ranks": {str(2 * i): r for i, r in enumerate(hs)},
            "ordinary_betti": {str(d): r for d, r in enumerate(po)}}
    summary = f"ranks of H_T in degrees 0, 2, ..: {hs}; Betti numbers {po}"
    if args.presentation:
        try:
            pres = cohomology.presentation_from_dict(g, _json(args.presentation))
        except (KeyError, TypeError) as exc:
            raise UsageError(f"malformed presentation: {exc}") from None
        rep = cohomology.verify_presentation(g, pres, D)
        body["presentation"] = rep.to_dict()
        if not rep.ok:
            raise DomainError(json.dumps(_report("cohomology", body), sort_keys=True),
                              "presentation does not match the graph cohomology")
        summary += "; presentation verified"
    return _report("cohomology", body), summary


def cmd_chern(args):
    g = _graph(args.file)
    data = chern.chern_data(g)
    return _report("chern", data.to_dict()), "c1^3={c1^3} c1c2={c1c2} c3={c3} todd={todd}".format(**data.to_dict())


def _class_file(g, path):
    d = _json(path)
    if not isinstance(d, dict):
        raise UsageError(f"{path}: a class file maps vertices to polynomials")
    table = d.get("table", d)
    env = {}
    for k, v in d.get("params", {}).items():
        env[k] = linear_form(v) if isinstance(v, list) else parse_polynomial(v, g.torus_rank, env)
    if set(table) != set(g.vertices):
        raise UsageError(f"{path}: class table must cover exactly the vertices {list(g.vertices)}")
    try:
        return cohomology.class_from_strings(g, table, env)
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from None


def cmd_integrate(args):
    g = _graph(args.file)
    env = {f"c{i}": chern.equivariant_chern(g, i) for i in range(1, g.valence + 1)}
    env["p1"] = chern.pontryagin(g)
    for item in args.define or []:
        name, sep, path = item.partition("=")
        if not sep or not name.isidentifier():
            raise UsageError(f"--define expects NAME=FILE, got {item!r}")
        env[name] = _class_file(g, path)
    try:
        c = evaluate(args.class_expr, env)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not isinstance(c, cohomology.EquivariantClass):
        c = cohomology.EquivariantClass.constant(g, c)
    val = chern.integrate(g, c)
    return _report("integrate", {"class": args.class_expr, "integral": str(val)}), f"integral of {args.class_expr} = {val}"


def cmd_aut(args):
    g = _graph(args.file)
    group = symmetry.gkm_automorphisms(g)
    body = {"aut": group.to_dict()}
    summary = f"|Aut| = {group.order}"
    if args.star:
        star = symmetry.aut_star(g, group)
        body["aut_star"] = star.to_dict()
        summary += f", |Aut*| = {star.order}"
    return _report("aut", body), summary


def cmd_blowup_vertex(args):
    g = constructions.blowup_vertex(_graph(args.file), args.vertex)
    return _graph_report(g, "blowup-vertex"), f"blew up vertex {args.vertex}: {len(g.vertices)} vertices"


def cmd_blowup_edge(args):
    g = constructions.blowup_edge(_graph(args.file), args.edge, args.connection)
    return _graph_report(g, "blowup-edge"), f"blew up edge {args.edge}: {len(g.vertices)} vertices"


def cmd_glue(args):
    g = constructions.glue_s6(_graph(args.file_a), _graph(args.file_b))
    return _graph_report(g, "glue"), f"glued graph: {len(g.vertices)} vertices, {len(g.edges)} edges"


def cmd_catalog(args):
    try:
        params = json.loads(args.params)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--params: invalid JSON ({exc.msg})") from None
    if args.type not in constructions.CATALOG_TYPES:
        raise UsageError(f"unknown type {args.type!r}; choose from {', '.join(constructions.CATALOG_TYPES)}")
    if not isinstance(params, dict):
        raise UsageError("--params must be a JSON object")
    g = constructions.catalog_from_params(args.type, params)
    return _graph_report(g, "catalog"), f"catalog {args.type}: {len(g.vertices)} vertices"


def cmd_classify(args):
    try:
        wd = classify.WeightData.from_dict(_json(args.weights))
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed weight data: {exc}") from None
    found = classify.enumerate_graphs(wd, dedup_gl=args.dedup_gl)
    body = {"count": len(found), "graphs": [g.to_dict() for g in found]}
    return _report("classify", body), f"{len(found)} GKM graph(s) with these weights"


def cmd_oct(args):
    rep = octonion.oct_check(samples=args.samples, seed=args.seed)
    if not rep["ok"]:
        raise DomainError(json.dumps(_report("oct-check", rep), sort_keys=True), "octonion checks failed")
    flagged = "" if rep["checks"]["printed_pair_rule_has_left_identity"] else " (printed pair rule flagged)"
    return _report("oct-check", rep), "all octonion checks passed" + flagged


def build_parser():
    p = argparse.ArgumentParser(prog="gkm", description="Exact computations with GKM graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check the GKM axioms")
    s.add_argument("file")
    s.add_argument("--effective", action="store_true", help="also require the weights to span the lattice")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("cohomology", help="graded ranks and presentation check")
    s.add_argument("file")
    s.add_argument("--max-degree", type=int, required=True)
    s.add_argument("--presentation")
    s.set_defaults(func=cmd_cohomology)

    s = sub.add_parser("chern", help="Chern numbers and Todd genus")
    s.add_argument("file")
    s.set_defaults(func=cmd_chern)

    s = sub.add_parser("integrate", help="integrate a class by localization")
    s.add_argument("file")
    s.add_argument("--class", dest="class_expr", required=True, help="expression in c1, c2, c3, p1 and defined names")
    s.add_argument("--define", action="append", metavar="NAME=FILE", help="name a class given by a vertex table")
    s.set_defaults(func=cmd_integrate)

    s = sub.add_parser("aut", help="automorphism group")
    s.add_argument("file")
    s.add_argument("--star", action="store_true", help="also compute the subgroup acting trivially on H^*")
    s.set_defaults(func=cmd_aut)

    s = sub.add_parser("blowup-vertex")
    s.add_argument("file")
    s.add_argument("--vertex", required=True)
    s.set_defaults(func=cmd_blowup_vertex)

    s = sub.add_parser("blowup-edge")
    s.add_argument("file")
    s.add_argument("--edge", required=True)
    s.add_argument("--connection", type=int)
    s.set_defaults(func=cmd_blowup_edge)

    s = sub.add_parser("glue", help="glue two graphs along S^6-type neighbourhoods")
    s.add_argument("file_a")
    s.add_argument("file_b")
    s.set_defaults(func=cmd_glue)

    s = sub.add_parser("catalog", help="emit a named graph")
    s.add_argument("type")
    s.add_argument("--params", required=True, help='JSON object, e.g. {"a":[1,0],"b":[0,1]}')
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("classify", help="all GKM graphs with given vertex weights")
    s.add_argument("--weights", required=True)
    s.add_argument("--dedup-gl", action="store_true")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("oct", help="octonion checks")
    s.add_argument("action", choices=["check"])
    s.add_argument("--samples", type=int, default=50)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_oct)
    return p


def _emit(doc, out):
    out.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        doc, summary = args.func(args)
    except UsageError as exc:
        _emit(_report("error", {"kind": "usage", "message": str(exc)}), stdout)
        print(f"error: {exc}", file=stderr)
        return 2
    except KeyError as exc:
        # an argument named a vertex or edge the graph does not have
        msg = exc.args[0] if exc.args else "unknown name"
        _emit(_report("error", {"kind": "usage", "message": str(msg)}), stdout)
        print(f"error: {msg}", file=stderr)
        return 2
    except DomainError as exc:
        report, message = exc.args
        stdout.write(json.dumps(json.loads(report), sort_keys=True, indent=2) + "\n")
        print(message, file=stderr)
        return 1
    except (ValueError, AssertionError, ZeroDivisionError) as exc:
        _emit(_report("error", {"kind": "domain", "type": type(exc).__name__, "message": str(exc)}), stdout)
        print(f"{type(exc).__name__}: {exc}", file=stderr)
        return 1
    _emit(doc, stdout)
    print(summary, file=stderr)
    return 0


def main():
    sys.exit(run())
