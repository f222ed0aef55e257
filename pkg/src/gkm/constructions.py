"""Named GKM graphs and graph surgeries: vertex and edge blow-ups, S6 gluing."""

from __future__ import annotations

from itertools import combinations

from . import lattice
from .graph import Edge, GkmGraph, connections_along, validate
from .lattice import Weight


class ConstructionError(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness or {}


class AmbiguousConnection(ConstructionError):
    pass


CATALOG_TYPES = ("P1", "P2", "P3", "Q1", "Q2", "S", "S6")
CATALOG_PARAMS = {
    "P1": ("a", "b", "c"), "P2": ("a", "b"), "P3": ("a", "b"), "Q1": ("a", "b"),
    "Q2": ("a", "b"), "S": ("a", "b", "k"), "S6": ("a", "b"),
}


def _w(x):
    return x if isinstance(x, Weight) else Weight(x)


def _graph(rank, rows):
    """rows: list of (from, to, weight); ids e1, e2, ... in listed order."""
    verts = sorted({v for s, t, _ in rows for v in (s, t)})
    return GkmGraph(rank, verts, [Edge(f"e{i + 1}", s, t, w) for i, (s, t, w) in enumerate(rows)])


def catalog(kind: str, a, b, c=None, k=None, require_effective: bool = True) -> GkmGraph:
    """The graph of the given type.

    Vertices p1..p4 are listed in the order of the type's weight table, and
    each weight is the label of the edge leaving the first-named vertex.
    """
    if kind not in CATALOG_TYPES:
        raise ValueError(f"unknown catalog type {kind!r}; expected one of {CATALOG_TYPES}")
    a, b = _w(a), _w(b)
    n = len(a)
    if kind == "P1":
        if c is None:
            raise ValueError("P1 needs a third weight c")
        c = _w(c)
        if require_effective and not lattice.generates_lattice([a, b, c]):
            raise ValueError("P1 parameters a, b, c must generate the weight lattice")
        rows = [("p1", "p2", a), ("p1", "p3", b), ("p1", "p4", c),
                ("p2", "p3", b - a), ("p3", "p4", c - b), ("p4", "p2", a - c)]
    else:
        if c is not None and kind != "S":
            raise ValueError(f"{kind} takes two weights")
        if require_effective and not (n == 2 and lattice.generates_lattice([a, b])
                                      and abs(lattice.det([list(a), list(b)])) == 1):
            raise ValueError(f"{kind} parameters a, b must form a basis of Z^2")
        s = a + b
        if kind == "P2":
            rows = [("p2", "p1", a), ("p3", "p1", b), ("p4", "p1", -a - b),
                    ("p2", "p3", b - a), ("p3", "p4", -a - 2 * b), ("p4", "p2", 2 * a + b)]
        elif kind == "P3":
            rows = [("p1", "p2", a), ("p1", "p4", b), ("p1", "p3", -a - b),
                    ("p2", "p4", a - b), ("p2", "p3", b), ("p4", "p3", a)]
        elif kind == "Q1":
            rows = [("p1", "p2", a - b), ("p1", "p4", s), ("p1", "p3", a),
                    ("p2", "p4", b), ("p2", "p3", s), ("p4", "p3", a - b)]
        elif kind == "Q2":
            rows = [("p1", "p2", a - b), ("p1", "p4", s), ("p3", "p1", a),
                    ("p4", "p2", b), ("p2", "p3", s), ("p4", "p3", a - b)]
        elif kind == "S":
            if k is None:
                raise ValueError("S needs the integer k")
            cc, dd = a - k * s, b + k * s
            rows = [("p2", "p1", s), ("p1", "p3", a), ("p1", "p3", b),
                    ("p4", "p2", cc), ("p4", "p2", dd), ("p3", "p4", s)]
        else:  # S6
            rows = [("n", "s", a), ("n", "s", b), ("s", "n", s)]
    g = _graph(n, rows)
    rep = validate(g)
    if not rep.valid:
        raise ValueError(f"parameters give an invalid {kind} graph: {rep.to_dict()}")
    return g


def catalog_from_params(kind: str, params: dict, require_effective: bool = True) -> GkmGraph:
    allowed = set(CATALOG_PARAMS.get(kind, ()))
    extra = set(params) - allowed
    if extra:
        raise ValueError(f"unknown parameters for {kind}: {sorted(extra)}")
    return catalog(kind, params.get("a"), params.get("b"), c=params.get("c"), k=params.get("k"),
                   require_effective=require_effective)


def _check_independent(name, ws):
    for u, v in combinations(ws, 2):
        if lattice.parallel(u, v):
            raise ConstructionError(
                f"new vertex {name} has parallel weights {list(u)} and {list(v)}",
                {"vertex": name, "weights": [list(u), list(v)]})


def _finish(g, what):
    rep = validate(g)
    if not rep.valid:
        raise ConstructionError(f"{what} produced an invalid graph", rep.to_dict())
    return g


def blowup_vertex(g: GkmGraph, p: str) -> GkmGraph:
    """Replace p by a complete graph on p.1..p.m (exceptional edges w_j - w_i)."""
    if p not in g.vertices:
        raise KeyError(f"unknown vertex {p!r}")
    hs = g.out_edges(p)
    if any(h.head == p for h in hs):
        raise ConstructionError(f"vertex {p} carries a loop", {"vertex": p})
    names = [f"{p}.{i + 1}" for i in range(len(hs))]
    taken = set(g.vertices)
    for nm in names:
        if nm in taken:
            raise ConstructionError(f"generated name {nm} collides with an existing vertex")
    ws = [h.weight for h in hs]
    for i, nm in enumerate(names):
        _check_independent(nm, [ws[i]] + [ws[j] - ws[i] for j in range(len(ws)) if j != i])
    slot = {h.edge: names[i] for i, h in enumerate(hs)}
    edges = []
    for e in g.edges:
        src = slot[e.id] if e.src == p else e.src
        dst = slot[e.id] if e.dst == p else e.dst
        edges.append(Edge(e.id, src, dst, e.weight))
    for i, j in combinations(range(len(hs)), 2):
        edges.append(Edge(f"{p}.x{i + 1}{j + 1}", names[i], names[j], ws[j] - ws[i]))
    verts = [v for v in g.vertices if v != p] + names
    return _finish(GkmGraph(g.torus_rank, verts, edges), f"blow-up at {p}")


def blowup_edge(g: GkmGraph, edge_id: str, conn=None) -> GkmGraph:
    """Replace the edge by a 4-cycle (A.1, A.2, B.2, B.1) using a connection along it.

    conn may be an index into connections_along(g, edge_id) or an explicit
    slot dict; it is required when more than one connection exists.
    """
    e = g.edge(edge_id)
    A, B, w = e.src, e.dst, e.weight
    if g.degree(A) != 3 or g.degree(B) != 3:
        raise ConstructionError("edge blow-up needs 3-valent endpoints", {"edge": edge_id})
    conns = connections_along(g, edge_id)
    if isinstance(conn, int):
        if not 0 <= conn < len(conns):
            raise ConstructionError(f"connection index {conn} out of range ({len(conns)} available)",
                                    {"edge": edge_id, "count": len(conns)})
        chosen = conns[conn]
    elif isinstance(conn, dict):
        if conn not in conns:
            raise ConstructionError("supplied connection is not a congruence bijection", {"edge": edge_id})
        chosen = conn
    elif not conns:
        raise ConstructionError(f"no connection along {edge_id}", {"edge": edge_id})
    elif len(conns) > 1:
        raise AmbiguousConnection(f"ambiguous connection: {len(conns)} bijections along {edge_id}",
                                  {"edge": edge_id, "connections": conns})
    else:
        chosen = conns[0]
    us = [h for h in g.out_edges(A) if h.edge != edge_id]
    vs = [g.half_edge(chosen[h.edge], B) for h in us]
    a_names = [f"{A}.1", f"{A}.2"]
    b_names = [f"{B}.1", f"{B}.2"]
    for nm in a_names + b_names:
        if nm in g.vertices:
            raise ConstructionError(f"generated name {nm} collides with an existing vertex")
    u, v = [h.weight for h in us], [h.weight for h in vs]
    for i in range(2):
        j = 1 - i
        _check_independent(a_names[i], [w, u[j] - u[i], u[i]])
        _check_independent(b_names[i], [-w, v[j] - v[i], v[i]])
    at_a = {h.edge: a_names[i] for i, h in enumerate(us)}
    at_b = {h.edge: b_names[i] for i, h in enumerate(vs)}
    edges = []
    for f in g.edges:
        if f.id == edge_id:
            continue
        src = at_a[f.id] if f.src == A else at_b[f.id] if f.src == B else f.src
        dst = at_a[f.id] if f.dst == A else at_b[f.id] if f.dst == B else f.dst
        edges.append(Edge(f.id, src, dst, f.weight))
    edges += [
        Edge(f"{edge_id}.1", a_names[0], b_names[0], w),
        Edge(f"{edge_id}.2", a_names[1], b_names[1], w),
        Edge(f"{A}.f", a_names[0], a_names[1], u[1] - u[0]),
        Edge(f"{B}.f", b_names[0], b_names[1], v[1] - v[0]),
    ]
    verts = [x for x in g.vertices if x not in (A, B)] + a_names + b_names
    return _finish(GkmGraph(g.torus_rank, verts, edges), f"blow-up along {edge_id}")


def _is_s6_shape(g):
    return len(g.vertices) == 2 and len(g.edges) == 3 and all(e.src != e.dst for e in g.edges)


def _cut_edge(g, cut):
    if cut is not None:
        return g.edge(cut)
    p, q = g.vertices
    fwd = [e for e in g.edges if e.src == p]
    back = [e for e in g.edges if e.src == q]
    if len(fwd) == 1:
        return fwd[0]
    if len(back) == 1:
        return back[0]
    raise ConstructionError("cut edge is ambiguous (all edges share one orientation); pass it explicitly")


def _glue_side(g, cut):
    """Return (tail s, head n, w, [uncut edges as (id, weight at n)])."""
    if not _is_s6_shape(g):
        raise ConstructionError("gluing needs 2-vertex, 3-edge inputs", {"vertices": list(g.vertices)})
    e = _cut_edge(g, cut)
    s, n = e.src, e.dst
    rest = [g.half_edge(f.id, n) for f in g.edges if f.id != e.id]
    return s, n, e.weight, rest


def glue_parameter(a, b, c, d, w=None):
    """The integer k with {c, d} = {a - k w, b + k w}, or None."""
    a, b, c, d = map(_w, (a, b, c, d))
    w = a + b if w is None else _w(w)
    for x, y in ((c, d), (d, c)):
        k = lattice.congruent(a, x, w)
        if k is not None and y == b + k * w:
            return k
    return None


def glue_s6(g1: GkmGraph, g2: GkmGraph, cut1=None, cut2=None, suffixes=("1", "2")) -> GkmGraph:
    """Glue two S6-shaped graphs along a cut edge (the type S construction).

    The cut edge of each input defaults to the edge whose stored orientation
    differs from the other two.
    """
    s1, n1, w1, r1 = _glue_side(g1, cut1)
    s2, n2, w2, r2 = _glue_side(g2, cut2)
    ab = [h.weight for h in r1]
    cd = [h.weight for h in r2]
    if ab[0] + ab[1] != w1 or cd[0] + cd[1] != w2:
        raise ConstructionError("an input is not S6-shaped: normal weights do not sum to the cut label",
                                {"sum1": list(ab[0] + ab[1]), "cut1": list(w1),
                                 "sum2": list(cd[0] + cd[1]), "cut2": list(w2)})
    if w1 != w2:
        raise ConstructionError("sums differ: a+b != c+d", {"a+b": list(w1), "c+d": list(w2)})
    w = w1
    ok = any(lattice.congruent(x, y, w) is not None and lattice.congruent(ab[1], z, w) is not None
             for x, y, z in ((ab[0], cd[0], cd[1]), (ab[0], cd[1], cd[0])))
    if not ok:
        raise ConstructionError("congruence {a,b} = {c,d} mod a+b fails",
                                {"a,b": [list(x) for x in ab], "c,d": [list(x) for x in cd], "mod": list(w)})
    x1, x2 = suffixes
    N1, S1, N2, S2 = n1 + x1, s1 + x1, n2 + x2, s2 + x2
    edges = [Edge(f"{h.edge}.{x1}", N1, S1, h.weight) for h in r1]
    edges += [Edge(f"{h.edge}.{x2}", N2, S2, h.weight) for h in r2]
    edges += [Edge(f"w{x1}", S2, N1, w), Edge(f"w{x2}", S1, N2, w)]
    g = GkmGraph(g1.torus_rank, [N1, S1, N2, S2], edges)
    return _finish(g, "gluing")
