"""Fixed-point weight data, graph enumeration from weights, Chern distinctness."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import gcd

from . import lattice
from .chern import chern_numbers
from .graph import Edge, GkmGraph, isomorphic, validate
from .lattice import Weight

CASES = ("A", "B", "C", "D", "E", "F")


@dataclass(frozen=True)
class WeightData:
    """Weight multisets at the fixed points p1, p2, ... (one list per point)."""
    torus_rank: int
    multisets: tuple

    def __post_init__(self):
        ms = tuple(tuple(Weight(w) for w in m) for m in self.multisets)
        object.__setattr__(self, "multisets", ms)
        for i, m in enumerate(ms):
            if any(len(w) != self.torus_rank for w in m):
                raise lattice.RankMismatch(f"multiset {i + 1} has weights of the wrong rank")
            if any(w.is_zero() for w in m):
                raise ValueError(f"multiset {i + 1} contains a zero weight")
            # in rank 1 every pair is parallel; independence is a rank >= 2 condition
            if self.torus_rank > 1 and not lattice.pairwise_independent(m):
                raise ValueError(f"multiset {i + 1} is not pairwise independent: {[list(w) for w in m]}")

    @property
    def vertices(self):
        return tuple(f"p{i + 1}" for i in range(len(self.multisets)))

    def weights(self, p):
        return list(self.multisets[int(p[1:]) - 1])

    def permuted(self, order):
        return WeightData(self.torus_rank, tuple(self.multisets[i] for i in order))

    def map_weights(self, psi):
        return WeightData(self.torus_rank, tuple(tuple(lattice.apply(psi, w) for w in m) for m in self.multisets))

    def to_dict(self):
        return {"torus_rank": self.torus_rank, "multisets": [[list(w) for w in m] for m in self.multisets]}

    @classmethod
    def from_dict(cls, d):
        extra = set(d) - {"torus_rank", "multisets"}
        if extra:
            raise ValueError(f"unknown keys {sorted(extra)}")
        return cls(d["torus_rank"], tuple(tuple(Weight(w) for w in m) for m in d["multisets"]))

    @classmethod
    def from_graph(cls, g):
        return cls(g.torus_rank, tuple(tuple(g.weights(v)) for v in g.vertices))


def _positive(*xs):
    if any(isinstance(x, bool) or not isinstance(x, int) or x <= 0 for x in xs):
        raise ValueError(f"circle parameters must be positive integers, got {xs}")


def case_weights(case: str, **params) -> WeightData:
    """Weight multisets of the named case.

    Integer parameters give circle (rank 1) data; weight-vector parameters give
    rank-2 data.  Case D in rank 2 accepts either c, d or an integer k, with
    c = a - k(a+b), d = b + k(a+b).
    """
    if case not in CASES:
        raise ValueError(f"unknown case {case!r}")
    vals = [v for k, v in params.items() if k != "k"]
    circle = all(isinstance(v, int) and not isinstance(v, bool) for v in vals)
    W = (lambda x: Weight([x])) if circle else Weight
    p = {k: (W(v) if k != "k" else v) for k, v in params.items()}
    need = {"A": {"a", "b", "c"}, "B": {"a", "b"}, "C": {"a"}, "D": {"a", "b", "c", "d"},
            "E": {"a", "b"}, "F": {"a", "b"}}[case]
    if case == "D" and "k" in params:
        need = {"a", "b", "k"}
    if set(params) != need:
        raise ValueError(f"case {case} takes parameters {sorted(need)}, got {sorted(params)}")
    if case == "C" and not circle:
        raise ValueError("case C is circle data only")
    if circle:
        _positive(*vals)
        if case == "A":
            a, b, c = vals
            if len({a, b, c}) < 3 or gcd(gcd(a, b), c) != 1:
                raise ValueError("case A needs distinct a, b, c with gcd 1")
        if case in "BEF" and gcd(*vals) != 1:
            raise ValueError(f"case {case} needs gcd(a, b) = 1")
        if case == "D" and (gcd(params["a"], params["b"]) != 1 or gcd(params["c"], params["d"]) != 1):
            raise ValueError("case D needs gcd(a, b) = gcd(c, d) = 1")
    a = p.get("a")
    b = p.get("b")
    if case == "A":
        c = p["c"]
        ms = [[a, b, c], [-a, b - a, c - a], [-b, a - b, c - b], [-c, a - c, b - c]]
    elif case == "B":
        ms = [[a, a + b, a + 2 * b], [-a, b, a + 2 * b], [-a - 2 * b, -b, a], [-a - 2 * b, -a - b, -a]]
    elif case == "C":
        one = W(1)
        ms = [[one, 2 * one, 3 * one], [-one, one, a], [-one, -a, one], [-one, -2 * one, -3 * one]]
    elif case == "D":
        if "k" in params:
            s = a + b
            c, d = a - params["k"] * s, b + params["k"] * s
        else:
            c, d = p["c"], p["d"]
        ms = [[-a - b, a, b], [-c - d, c, d], [-a, -b, a + b], [-c, -d, c + d]]
    elif case == "E":
        ms = [[-3 * a - b, a, b], [-2 * a - b, 3 * a + b, 3 * a + 2 * b], [-a, -a - b, 2 * a + b],
              [-b, -3 * a - 2 * b, a + b]]
    else:
        ms = [[-a - b, 2 * a + b, b], [-2 * a - b, a, b], [-b, -2 * a - b, a + b], [-a, -b, 2 * a + b]]
    rank = 1 if circle else len(a)
    if not circle and rank == 2 and case != "A":
        if abs(lattice.det([list(a), list(b)])) != 1:
            raise ValueError(f"case {case} needs a, b to form a basis")
    return WeightData(rank, tuple(tuple(m) for m in ms))


def _congruent_rest(lp, lq, w):
    """Is there a bijection lp -> lq (minus w, -w) with pairwise congruence mod w?"""
    rest_p = list(lp)
    rest_p.remove(w)
    rest_q = list(lq)
    rest_q.remove(-w)
    return any(all(lattice.congruent(y, x, w) is not None for x, y in zip(rest_p, perm))
               for perm in permutations(rest_q))


def enumerate_graphs(wd: WeightData, dedup_gl: bool = False, connected: bool = True) -> list[GkmGraph]:
    """Every GKM graph whose vertex weights are exactly wd, up to isomorphism.

    Slots (vertex, index) are paired by backtracking: slot (p, i) with weight
    w pairs with an unused slot (q, j), q != p, of weight -w, provided the
    weights at p and q admit a congruence bijection mod w.
    """
    verts = wd.vertices
    slots = [(v, i) for v in verts for i in range(len(wd.weights(v)))]
    wt = {(v, i): wd.weights(v)[i] for v, i in slots}
    compatible = {}
    for s in slots:
        for t in slots:
            if s[0] != t[0] and wt[t] == -wt[s]:
                key = (s[0], t[0], tuple(wt[s]))
                if key not in compatible:
                    compatible[key] = _congruent_rest(wd.weights(s[0]), wd.weights(t[0]), wt[s])
    used = set()
    pairing = []
    results = []

    def rec():
        free = [s for s in slots if s not in used]
        if not free:
            edges = [Edge(f"e{i + 1}", s[0], t[0], wt[s]) for i, (s, t) in enumerate(pairing)]
            g = GkmGraph(wd.torus_rank, verts, edges)
            if connected and not g.is_connected():
                return
            if not validate(g).valid:
                return
            for h in results:
                if isomorphic(h, g, allow_lattice_change=dedup_gl) is not None:
                    return
            results.append(g)
            return
        s = free[0]
        for t in free[1:]:
            if t[0] == s[0] or wt[t] != -wt[s]:
                continue
            if not compatible[(s[0], t[0], tuple(wt[s]))]:
                continue
            used.update((s, t))
            pairing.append((s, t))
            rec()
            pairing.pop()
            used.difference_update((s, t))

    rec()
    return results


# (int c1c2, int c1^3) for the circle cases; case C depends on a
CHERN_TABLE = {"A": (24, 64), "B": (24, 54), "D": (0, 0), "E": (0, -8), "F": (0, -2)}
SAMPLE_PARAMS = {"A": dict(a=1, b=2, c=3), "B": dict(a=1, b=1), "D": dict(a=1, b=2, c=1, d=3),
                 "E": dict(a=1, b=1), "F": dict(a=1, b=1)}


def case_c_chern(a: int):
    return (24, 72 - 2 * a * a)


def distinctness_certificate(samples=None) -> dict:
    """Chern pairs of cases A, B, D, E, F computed by localization; checks distinctness."""
    samples = samples or SAMPLE_PARAMS
    rows = {}
    ok = True
    for case, params in samples.items():
        c13, c1c2, c3 = chern_numbers(case_weights(case, **params))
        pair = (int(c1c2), int(c13))
        rows[case] = {"params": params, "c1c2": pair[0], "c1^3": pair[1], "c3": int(c3),
                      "matches_table": pair == CHERN_TABLE[case]}
        ok = ok and pair == CHERN_TABLE[case]
    pairs = [(r["c1c2"], r["c1^3"]) for r in rows.values()]
    distinct = len(set(pairs)) == len(pairs)
    case_c = {}
    for a in (1, 2, 3, 4, 5):
        c13, c1c2, _ = chern_numbers(case_weights("C", a=a))
        pair = (int(c1c2), int(c13))
        case_c[a] = {"c1c2": pair[0], "c1^3": pair[1], "formula": pair == case_c_chern(a),
                     "coincides_with": [k for k, v in CHERN_TABLE.items() if v == pair]}
        ok = ok and pair == case_c_chern(a)
    return {"cases": rows, "distinct": distinct, "case_C": case_c, "ok": ok and distinct}


def certificate_json(cert) -> str:
    return json.dumps(cert, sort_keys=True, default=str)
