"""GKM graphs: data model, axiom checks, connections, isomorphisms, JSON I/O."""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations

from . import lattice
from .lattice import Weight
from .linalg import rank as q_rank
from .linalg import solve as q_solve


class MalformedGraphError(ValueError):
    """The input record is not a graph at all (distinct from axiom failure)."""


@dataclass(frozen=True)
class Edge:
    id: str
    src: str
    dst: str
    weight: Weight

    def sort_key(self):
        return (self.src, self.dst, tuple(self.weight), self.id)


@dataclass(frozen=True)
class HalfEdge:
    """An oriented edge leaving `tail`. sign=+1 follows the stored orientation."""
    edge: str
    tail: str
    head: str
    weight: Weight
    sign: int


class GkmGraph:
    """A regular multigraph with an axial function.

    Each undirected edge is stored once; its reversal carries the negated
    weight and is produced on demand by ``out_edges``.
    """

    def __init__(self, torus_rank: int, vertices, edges):
        if isinstance(torus_rank, bool) or not isinstance(torus_rank, int) or torus_rank < 1:
            raise MalformedGraphError(f"torus_rank must be a positive integer, got {torus_rank!r}")
        vertices = list(vertices)
        if any(not isinstance(v, str) or not v for v in vertices):
            raise MalformedGraphError("vertex names must be nonempty strings")
        if len(set(vertices)) != len(vertices):
            dup = [v for v, k in Counter(vertices).items() if k > 1]
            raise MalformedGraphError(f"duplicate vertex names: {dup}")
        vset = set(vertices)
        clean = []
        ids = set()
        for e in edges:
            if not isinstance(e, Edge):
                e = Edge(*e)
            if not isinstance(e.id, str) or not e.id:
                raise MalformedGraphError(f"edge id must be a nonempty string, got {e.id!r}")
            if e.id in ids:
                raise MalformedGraphError(f"duplicate edge id {e.id!r}")
            ids.add(e.id)
            for end in (e.src, e.dst):
                if end not in vset:
                    raise MalformedGraphError(f"edge {e.id!r} refers to unknown vertex {end!r}")
            try:
                w = e.weight if isinstance(e.weight, Weight) else Weight(e.weight)
            except TypeError as exc:
                raise MalformedGraphError(f"edge {e.id!r}: {exc}") from None
            if len(w) != torus_rank:
                raise MalformedGraphError(
                    f"edge {e.id!r}: weight {list(w)} has length {len(w)}, torus rank is {torus_rank}")
            clean.append(Edge(e.id, e.src, e.dst, w))
        self.torus_rank = torus_rank
        self.vertices = tuple(sorted(vertices))
        self.edges = tuple(sorted(clean, key=Edge.sort_key))
        self._by_id = {e.id: e for e in self.edges}
        self._out = {v: [] for v in self.vertices}
        for e in self.edges:
            self._out[e.src].append(HalfEdge(e.id, e.src, e.dst, e.weight, 1))
            self._out[e.dst].append(HalfEdge(e.id, e.dst, e.src, -e.weight, -1))
        for v in self.vertices:
            self._out[v].sort(key=lambda h: (h.edge, h.sign))

    # queries
    def edge(self, eid) -> Edge:
        if eid not in self._by_id:
            raise KeyError(f"unknown edge id {eid!r}")
        return self._by_id[eid]

    def out_edges(self, p) -> list[HalfEdge]:
        return list(self._out[p])

    def weights(self, p) -> list[Weight]:
        """Lambda_p, the multiset of outgoing weights at p."""
        return [h.weight for h in self._out[p]]

    def half_edge(self, eid, tail) -> HalfEdge:
        for h in self._out[tail]:
            if h.edge == eid:
                return h
        raise KeyError(f"edge {eid!r} does not leave {tail!r}")

    def degree(self, p) -> int:
        return len(self._out[p])

    @property
    def valence(self) -> int:
        degs = {len(self._out[v]) for v in self.vertices}
        if len(degs) != 1:
            raise ValueError(f"graph is not regular: degrees {sorted(degs)}")
        return degs.pop()

    def neighbors(self, p):
        return sorted({h.head for h in self._out[p]})

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = {self.vertices[0]}
        todo = [self.vertices[0]]
        while todo:
            for q in self.neighbors(todo.pop()):
                if q not in seen:
                    seen.add(q)
                    todo.append(q)
        return len(seen) == len(self.vertices)

    def weight_multiset(self, p):
        return tuple(sorted(tuple(w) for w in self.weights(p)))

    # transforms
    def map_weights(self, psi) -> "GkmGraph":
        return GkmGraph(self.torus_rank, self.vertices,
                        [Edge(e.id, e.src, e.dst, lattice.apply(psi, e.weight)) for e in self.edges])

    def reversed(self) -> "GkmGraph":
        """Same graph with every stored orientation flipped (weights negated)."""
        return GkmGraph(self.torus_rank, self.vertices,
                        [Edge(e.id, e.dst, e.src, -e.weight) for e in self.edges])

    def renamed(self, vmap=None, emap=None) -> "GkmGraph":
        vmap = vmap or {}
        emap = emap or {}
        return GkmGraph(self.torus_rank, [vmap.get(v, v) for v in self.vertices],
                        [Edge(emap.get(e.id, e.id), vmap.get(e.src, e.src), vmap.get(e.dst, e.dst), e.weight)
                         for e in self.edges])

    # serialization
    def to_dict(self):
        return {
            "torus_rank": self.torus_rank,
            "vertices": list(self.vertices),
            "edges": [{"id": e.id, "from": e.src, "to": e.dst, "weight": list(e.weight)} for e in self.edges],
        }

    def to_json(self, indent=None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, d) -> "GkmGraph":
        if not isinstance(d, dict):
            raise MalformedGraphError("graph document must be a JSON object")
        extra = set(d) - {"torus_rank", "vertices", "edges"}
        if extra:
            raise MalformedGraphError(f"unknown keys: {sorted(extra)}")
        missing = {"torus_rank", "vertices", "edges"} - set(d)
        if missing:
            raise MalformedGraphError(f"missing keys: {sorted(missing)}")
        if not isinstance(d["vertices"], list) or not isinstance(d["edges"], list):
            raise MalformedGraphError("vertices and edges must be arrays")
        edges = []
        for rec in d["edges"]:
            if not isinstance(rec, dict):
                raise MalformedGraphError("edge records must be objects")
            extra = set(rec) - {"id", "from", "to", "weight"}
            if extra:
                raise MalformedGraphError(f"unknown edge keys: {sorted(extra)}")
            if set(rec) != {"id", "from", "to", "weight"}:
                raise MalformedGraphError(f"edge record missing keys: {rec}")
            w = rec["weight"]
            if not isinstance(w, list) or any(isinstance(x, bool) or not isinstance(x, int) for x in w):
                raise MalformedGraphError(f"edge {rec['id']!r}: weight must be an integer array")
            edges.append(Edge(rec["id"], rec["from"], rec["to"], w))
        return cls(d["torus_rank"], d["vertices"], edges)

    @classmethod
    def from_json(cls, text: str) -> "GkmGraph":
        try:
            d = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedGraphError(f"invalid JSON: {exc}") from None
        return cls.from_dict(d)

    def __eq__(self, other):
        return isinstance(other, GkmGraph) and self.to_dict() == other.to_dict()

    def __hash__(self):
        return hash(self.to_json())

    def __repr__(self):
        return f"GkmGraph(rank={self.torus_rank}, vertices={list(self.vertices)}, edges={len(self.edges)})"


def load(path) -> GkmGraph:
    with open(path) as fh:
        return GkmGraph.from_json(fh.read())


def dump(g: GkmGraph, path):
    with open(path, "w") as fh:
        fh.write(g.to_json(indent=2) + "\n")


# --- validation ---

@dataclass
class AxiomResult:
    ok: bool
    failures: list = field(default_factory=list)  # each entry is a witness dict

    def to_dict(self):
        return {"ok": self.ok, "failures": self.failures}


@dataclass
class ValidationReport:
    regular: AxiomResult
    reversal: AxiomResult
    independence: AxiomResult
    congruence: AxiomResult
    effective: AxiomResult | None = None

    @property
    def valid(self) -> bool:
        return self.regular.ok and self.reversal.ok and self.independence.ok and self.congruence.ok

    def to_dict(self):
        out = {
            "valid": self.valid,
            "regular": self.regular.to_dict(),
            "reversal": self.reversal.to_dict(),
            "independence": self.independence.to_dict(),
            "congruence": self.congruence.to_dict(),
        }
        if self.effective is not None:
            out["effective"] = self.effective.to_dict()
        return out


def validate(g: GkmGraph, check_effective: bool = False) -> ValidationReport:
    degs = {v: g.degree(v) for v in g.vertices}
    reg = AxiomResult(len(set(degs.values())) <= 1)
    if not reg.ok:
        reg.failures = [{"vertex": v, "degree": d} for v, d in degs.items()]

    # Reversal is structural (the reversed edge is synthesized with -w); what can
    # still fail is a zero label, which has no well-defined reversal partner.
    rev = AxiomResult(True)
    for e in g.edges:
        if e.weight.is_zero():
            rev.ok = False
            rev.failures.append({"edge": e.id, "weight": list(e.weight)})

    ind = AxiomResult(True)
    for v in g.vertices:
        hs = g.out_edges(v)
        for h1, h2 in combinations(hs, 2):
            if lattice.parallel(h1.weight, h2.weight):
                ind.ok = False
                ind.failures.append({"vertex": v, "edges": [h1.edge, h2.edge],
                                     "weights": [list(h1.weight), list(h2.weight)]})
        for h in hs:
            if h.weight.is_zero():
                ind.ok = False
                ind.failures.append({"vertex": v, "edges": [h.edge], "weights": [list(h.weight)]})

    con = AxiomResult(True)
    if not (ind.ok and reg.ok and rev.ok):
        con.ok = False
        con.failures.append({"skipped": "independence, regularity or reversal failed"})
    else:
        for e in g.edges:
            if not connections_along(g, e.id, limit=1):
                con.ok = False
                con.failures.append({"edge": e.id, "from": e.src, "to": e.dst, "weight": list(e.weight)})

    eff = None
    if check_effective:
        eff = AxiomResult(True)
        for v in g.vertices:
            ws = g.weights(v)
            if not ws or not lattice.generates_lattice(ws):
                eff.ok = False
                eff.failures.append({"vertex": v, "index": lattice.lattice_index(ws) if ws else 0})
    return ValidationReport(reg, rev, ind, con, eff)


def connections_along(g: GkmGraph, edge_id, limit=None) -> list[dict]:
    """All congruence bijections Lambda_tail -> Lambda_head along the stored orientation.

    Each bijection is a dict from edge ids at the tail to edge ids at the
    head; the edge itself always maps to itself (w -> -w).
    """
    e = g.edge(edge_id)
    if e.src == e.dst:
        return []
    tail = [h for h in g.out_edges(e.src) if h.edge != edge_id]
    head = [h for h in g.out_edges(e.dst) if h.edge != edge_id]
    if len(tail) != len(head):
        return []
    out = []
    for perm in permutations(head):
        if all(lattice.congruent(h2.weight, h1.weight, e.weight) is not None for h1, h2 in zip(tail, perm)):
            conn = {edge_id: edge_id}
            conn.update({h1.edge: h2.edge for h1, h2 in zip(tail, perm)})
            out.append(conn)
            if limit and len(out) >= limit:
                break
    return out


def invert_connection(conn: dict) -> dict:
    return {v: k for k, v in conn.items()}


# --- isomorphisms ---

@dataclass(frozen=True)
class Isomorphism:
    """vertex_map: g1 vertex -> g2 vertex; edge_map: g1 edge -> (g2 edge, sign);
    psi: integer matrix with alpha2(phi(e)) = psi * alpha1(e). sign=-1 means the
    stored orientations are opposite."""
    vertex_map: dict
    edge_map: dict
    psi: tuple

    def to_dict(self):
        return {
            "vertex_map": dict(sorted(self.vertex_map.items())),
            "edge_map": {k: list(v) for k, v in sorted(self.edge_map.items())},
            "psi": [list(r) for r in self.psi],
        }


def _between(g, u, v):
    return sorted(tuple(h.weight) for h in g.out_edges(u) if h.head == v)


def _fixed_vertex_maps(g1, g2):
    """Vertex bijections carrying every half-edge weight multiset exactly."""
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return
    if g1.torus_rank != g2.torus_rank:
        return
    sig2 = Counter(g2.weight_multiset(v) for v in g2.vertices)
    if Counter(g1.weight_multiset(v) for v in g1.vertices) != sig2:
        return
    # BFS order so that each new vertex is adjacent to one already placed
    order = []
    seen = set()
    for root in g1.vertices:
        if root in seen:
            continue
        seen.add(root)
        dq = deque([root])
        while dq:
            u = dq.popleft()
            order.append(u)
            for q in g1.neighbors(u):
                if q not in seen:
                    seen.add(q)
                    dq.append(q)
    loops1 = {v: _between(g1, v, v) for v in g1.vertices}
    loops2 = {v: _between(g2, v, v) for v in g2.vertices}

    vmap = {}
    used = set()

    def rec(i):
        if i == len(order):
            yield dict(vmap)
            return
        v = order[i]
        for cand in g2.vertices:
            if cand in used or g1.weight_multiset(v) != g2.weight_multiset(cand):
                continue
            if loops1[v] != loops2[cand]:
                continue
            if any(_between(g1, u, v) != _between(g2, vmap[u], cand) for u in order[:i]):
                continue
            vmap[v] = cand
            used.add(cand)
            yield from rec(i + 1)
            del vmap[v]
            used.discard(cand)

    yield from rec(0)


def _edge_map(g1, g2, vmap):
    """Pair edges of g1 with edges of g2 over a fixed vertex map (weights exact)."""
    emap = {}
    taken = set()
    for e in g1.edges:
        a, b = vmap[e.src], vmap[e.dst]
        for h in g2.out_edges(a):
            if h.head == b and h.weight == e.weight and h.edge not in taken:
                emap[e.id] = (h.edge, h.sign)
                taken.add(h.edge)
                break
        else:
            return None
    return emap


def _spanning_slots(g, p):
    """Indices into out_edges(p) whose weights form a Q-basis, or None."""
    ws = g.weights(p)
    n = g.torus_rank
    for idx in combinations(range(len(ws)), n):
        if q_rank([list(ws[i]) for i in idx]) == n:
            return list(idx)
    return None


def _solve_psi(src_ws, dst_ws):
    """Integer psi with psi * src_ws[i] = dst_ws[i], unimodular, or None."""
    n = len(src_ws[0])
    # psi * W = W'  <=>  W^T psi^T = W'^T, solved row by row of psi
    wt = [[Fraction(x) for x in w] for w in src_ws]
    psi = []
    for r in range(n):
        sol = q_solve(wt, [Fraction(w[r]) for w in dst_ws])
        if sol is None or any(x.denominator != 1 for x in sol):
            return None
        psi.append([int(x) for x in sol])
    if lattice.det(psi) not in (1, -1):
        return None
    return psi


def candidate_lattice_maps(g1, g2):
    """All unimodular psi that send some spanning frame of g1 onto weights of g2."""
    if g1.torus_rank != g2.torus_rank or not g1.vertices:
        return []
    p0 = next((v for v in g1.vertices if _spanning_slots(g1, v) is not None), None)
    if p0 is None:
        raise ValueError("weights at no vertex span the rational lattice; psi is underdetermined")
    idx = _spanning_slots(g1, p0)
    src = [g1.weights(p0)[i] for i in idx]
    seen = set()
    out = []
    for q in g2.vertices:
        wq = g2.weights(q)
        for choice in permutations(range(len(wq)), len(idx)):
            psi = _solve_psi(src, [wq[i] for i in choice])
            if psi is None:
                continue
            key = tuple(map(tuple, psi))
            if key not in seen:
                seen.add(key)
                out.append(psi)
    out.sort()
    return out


def iter_isomorphisms(g1: GkmGraph, g2: GkmGraph, allow_lattice_change: bool = False):
    n = g1.torus_rank
    psis = candidate_lattice_maps(g1, g2) if allow_lattice_change else [lattice.identity(n)]
    for psi in psis:
        h = g1.map_weights(psi)
        for vmap in _fixed_vertex_maps(h, g2):
            emap = _edge_map(h, g2, vmap)
            if emap is not None:
                yield Isomorphism(vmap, emap, tuple(map(tuple, psi)))


def isomorphic(g1: GkmGraph, g2: GkmGraph, allow_lattice_change: bool = False) -> Isomorphism | None:
    """A witness that g1 and g2 are the same GKM graph, or None.

    Lattice-fixed mode requires labels to agree exactly; otherwise an
    invertible integer matrix psi may first be applied to g1's labels.
    """
    if g1.torus_rank != g2.torus_rank:
        return None
    if allow_lattice_change:
        # identity first, so that lattice-fixed witnesses are preferred
        w = next(iter_isomorphisms(g1, g2, False), None)
        if w is not None:
            return w
    return next(iter_isomorphisms(g1, g2, allow_lattice_change), None)
