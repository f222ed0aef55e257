"""Equivariant graph cohomology: ranks, classes, presentations, ordinary quotient.

A class is a table p -> f_p in H*(BT) = Q[t1..tn] with f_i(e) - f_t(e)
divisible by the linear form of every edge label.  Degrees are topological
(a polynomial of degree m sits in degree 2m).
"""

from __future__ import annotations

import json
import numbers
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import lattice
from .linalg import Echelon, nullspace, rank as q_rank, solve as q_solve
from .polyring import (Polynomial, divide_by_linear, evaluate, linear_form, monomials,
                       parse_polynomial, restrict_to_hyperplane, variables)


class NotAClassError(ValueError):
    pass


class NotFreeError(ValueError):
    pass


class EquivariantClass:
    """An element of Map(V, H*(BT)); arithmetic is vertexwise."""

    __slots__ = ("graph", "values")

    def __init__(self, graph, values):
        self.graph = graph
        n = graph.torus_rank
        vals = {}
        for v in graph.vertices:
            if v not in values:
                raise ValueError(f"class table misses vertex {v!r}")
            x = values[v]
            if not isinstance(x, Polynomial):
                x = Polynomial.constant(n, x)
            if x.nvars != n:
                raise ValueError(f"value at {v!r} has {x.nvars} variables, torus rank is {n}")
            vals[v] = x
        extra = set(values) - set(graph.vertices)
        if extra:
            raise ValueError(f"class table names unknown vertices {sorted(extra)}")
        self.values = vals

    @classmethod
    def constant(cls, graph, f):
        return cls(graph, {v: f for v in graph.vertices})

    def __getitem__(self, v):
        return self.values[v]

    def _lift(self, other):
        if isinstance(other, EquivariantClass):
            if tuple(other.graph.vertices) != tuple(self.graph.vertices):
                raise ValueError("classes live on different graphs")
            return other
        if isinstance(other, Polynomial) or (isinstance(other, (numbers.Integral, Fraction))
                                             and not isinstance(other, bool)):
            return EquivariantClass.constant(self.graph, other)
        return None

    def _zip(self, other, op):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return EquivariantClass(self.graph, {v: op(self.values[v], other.values[v]) for v in self.values})

    def __add__(self, other):
        return self._zip(other, lambda x, y: x + y)

    __radd__ = __add__

    def __sub__(self, other):
        return self._zip(other, lambda x, y: x - y)

    def __rsub__(self, other):
        return self._zip(other, lambda x, y: y - x)

    def __mul__(self, other):
        return self._zip(other, lambda x, y: x * y)

    __rmul__ = __mul__

    def __neg__(self):
        return EquivariantClass(self.graph, {v: -x for v, x in self.values.items()})

    def __pos__(self):
        return self

    def __truediv__(self, other):
        if isinstance(other, (numbers.Integral, Fraction)) and not isinstance(other, bool):
            return EquivariantClass(self.graph, {v: x / other for v, x in self.values.items()})
        return NotImplemented

    def __pow__(self, k):
        return EquivariantClass(self.graph, {v: x ** k for v, x in self.values.items()})

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.values == other.values

    __hash__ = None

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.values.values())

    def degree(self) -> int:
        """Topological degree (max over vertices), -1 for the zero class."""
        return 2 * max((x.degree() for x in self.values.values()), default=-1) if not self.is_zero() \
            else -1

    def is_homogeneous(self) -> bool:
        degs = {x.degree() for x in self.values.values() if not x.is_zero()}
        return len(degs) <= 1 and all(x.is_homogeneous() for x in self.values.values())

    def act(self, vertex_map, psi) -> "EquivariantClass":
        """(phi, psi) . xi : phi(p) -> psi(xi(p))."""
        return EquivariantClass(self.graph, {vertex_map[v]: x.act(psi) for v, x in self.values.items()})

    def vector(self, m: int):
        """Coefficients in the degree-m monomial basis, vertex blocks in graph order."""
        mons = monomials(self.graph.torus_rank, m)
        return [self.values[v].coefficient(e) for v in self.graph.vertices for e in mons]

    def to_dict(self):
        return {v: str(x) for v, x in self.values.items()}

    def __repr__(self):
        return "EquivariantClass({" + ", ".join(f"{v}: {x}" for v, x in self.values.items()) + "})"


def class_from_strings(graph, table: dict, env: dict | None = None) -> EquivariantClass:
    n = graph.torus_rank
    return EquivariantClass(graph, {v: parse_polynomial(s, n, env) if isinstance(s, str) else s
                                    for v, s in table.items()})


def is_class(g, c) -> bool:
    vals = c.values if isinstance(c, EquivariantClass) else c
    if set(vals) != set(g.vertices):
        raise ValueError("table must cover exactly the graph's vertices")
    n = g.torus_rank
    for e in g.edges:
        f = vals[e.src] - vals[e.dst]
        if not isinstance(f, Polynomial):
            f = Polynomial.constant(n, f)
        if divide_by_linear(f, e.weight) is not None:
            continue
        return False
    return True


def edge_violations(g, c):
    """Edges along which the congruence fails."""
    vals = c.values if isinstance(c, EquivariantClass) else c
    return [e.id for e in g.edges if divide_by_linear(vals[e.src] - vals[e.dst], e.weight) is None]


# --- degree-wise linear algebra ---

@lru_cache(maxsize=256)
def _restriction_rows(weight: tuple, nvars: int, m: int):
    """Matrix of f -> restrict_to_hyperplane(f, w) on degree-m monomials."""
    mons = monomials(nvars, m)
    images = [restrict_to_hyperplane(Polynomial(nvars, {e: 1}), weight) for e in mons]
    targets = sorted({e for im in images for e in im.terms}, reverse=True)
    return [[im.coefficient(t) for im in images] for t in targets]


def _constraints(g, m):
    n = g.torus_rank
    mons = monomials(n, m)
    nm = len(mons)
    index = {v: i for i, v in enumerate(g.vertices)}
    rows = []
    for e in g.edges:
        block = _restriction_rows(tuple(e.weight), n, m)
        i, j = index[e.src], index[e.dst]
        for brow in block:
            row = [Fraction(0)] * (nm * len(g.vertices))
            row[i * nm:(i + 1) * nm] = brow
            for k, x in enumerate(brow):
                row[j * nm + k] -= x
            rows.append(row)
    return rows, nm


_space_cache: dict = {}


def _space(g, m):
    """Basis vectors of the degree-2m component (as coefficient vectors)."""
    key = (g.to_json(), m)
    if key not in _space_cache:
        rows, nm = _constraints(g, m)
        _space_cache[key] = nullspace(rows, nm * len(g.vertices))
    return _space_cache[key]


def _check_degree(d):
    if not isinstance(d, int) or isinstance(d, bool) or d < 0:
        raise ValueError(f"degree must be a nonnegative integer, got {d!r}")
    if d % 2:
        raise ValueError(f"odd degree {d}: graph cohomology is concentrated in even degrees")


def component_rank(g, degree: int) -> int:
    """dim_Q of the degree-d part of the graph cohomology."""
    _check_degree(degree)
    return len(_space(g, degree // 2))


def class_basis(g, degree: int) -> list[EquivariantClass]:
    _check_degree(degree)
    m = degree // 2
    return [vector_to_class(g, v, m) for v in _space(g, m)]


def vector_to_class(g, vec, m):
    n = g.torus_rank
    mons = monomials(n, m)
    nm = len(mons)
    return EquivariantClass(g, {v: Polynomial(n, {e: vec[i * nm + k] for k, e in enumerate(mons)})
                                for i, v in enumerate(g.vertices)})


def hilbert_series(g, max_degree: int) -> list[int]:
    """component_rank in degrees 0, 2, ..., max_degree."""
    return [component_rank(g, d) for d in range(0, max_degree + 1, 2)]


def free_module_series(generator_degrees, nvars, max_degree) -> list[int]:
    """Ranks of a free H*(BT)-module with the given generator degrees."""
    from math import comb
    out = []
    for d in range(0, max_degree + 1, 2):
        out.append(sum(comb((d - g) // 2 + nvars - 1, nvars - 1) for g in generator_degrees if g <= d))
    return out


def ordinary_poincare(g, max_degree: int) -> list[int]:
    """Betti numbers b_0..b_D from (sum rank_d s^d) * (1 - s^2)^n."""
    from math import comb
    _check_degree(max_degree)
    n = g.torus_rank
    ranks = hilbert_series(g, max_degree)
    out = []
    for k in range(len(ranks)):
        c = sum((-1) ** j * comb(n, j) * ranks[k - j] for j in range(min(n, k) + 1))
        if c < 0:
            raise NotFreeError(f"negative coefficient {c} in degree {2 * k}: cohomology is not a free module")
        out.append(c)
        if 2 * k < max_degree:
            out.append(0)
    return out


def _ideal_vectors(g, degree):
    """Spanning vectors of H^{>0}(BT) * H_T in the given degree."""
    if degree == 0:
        return []
    m = degree // 2
    ts = variables(g.torus_rank)
    return [(t * b).vector(m) for b in class_basis(g, degree - 2) for t in ts]


class BasisError(ValueError):
    pass


def ordinary_image(g, c: EquivariantClass, basis) -> list[Fraction]:
    """Coordinates of the image of c in H^d_T / (H^{>0}(BT) H_T) in the images of basis."""
    if isinstance(basis, dict):
        basis = list(basis.values())
    basis = list(basis)
    if not c.is_homogeneous():
        raise ValueError("class must be homogeneous")
    d = c.degree()
    degs = {b.degree() for b in basis}
    if d == -1:
        d = degs.pop() if len(degs) == 1 else None
        if d is None:
            raise ValueError("cannot infer degree of the zero class")
        return [Fraction(0)] * len(basis)
    if any(not b.is_homogeneous() or b.degree() != d for b in basis):
        raise BasisError(f"basis classes must be homogeneous of degree {d}")
    if not is_class(g, c) or not all(is_class(g, b) for b in basis):
        raise NotAClassError("input tables must be equivariant classes")
    m = d // 2
    ideal = Echelon(len(g.vertices) * len(monomials(g.torus_rank, m)))
    for v in _ideal_vectors(g, d):
        ideal.add(v)
    quotient_dim = component_rank(g, d) - ideal.rank
    if len(basis) != quotient_dim:
        raise BasisError(f"basis has {len(basis)} classes, quotient has dimension {quotient_dim}")
    reduced = [ideal.reduce(b.vector(m)) for b in basis]
    if q_rank(reduced) != len(basis):
        raise BasisError("basis images are linearly dependent in the quotient")
    target = ideal.reduce(c.vector(m))
    cols = [[r[i] for r in reduced] for i in range(len(target))]
    sol = q_solve(cols, target)
    if sol is None:
        raise BasisError("class is not in the span of the basis modulo the ideal")
    return sol


# --- presentations ---

@dataclass
class Presentation:
    generators: dict  # name -> EquivariantClass
    relations: list  # expression strings
    env: dict = field(default_factory=dict)  # base-ring names -> Polynomial
    max_degree: int = 12

    def namespace(self):
        ns = {f"t{i + 1}": x for i, x in enumerate(variables(self._rank()))}
        ns.update(self.env)
        ns.update(self.generators)
        return ns

    def _rank(self):
        return next(iter(self.generators.values())).graph.torus_rank

    def evaluate(self, expr):
        return evaluate(expr, self.namespace())

    def to_dict(self):
        return {
            "generators": {k: {"degree": c.degree(), "table": c.to_dict()} for k, c in self.generators.items()},
            "relations": list(self.relations),
            "params": {k: str(v) for k, v in self.env.items()},
            "max_degree": self.max_degree,
        }


def presentation_from_dict(g, d) -> Presentation:
    allowed = {"generators", "relations", "params", "max_degree"}
    extra = set(d) - allowed
    if extra:
        raise ValueError(f"unknown presentation keys {sorted(extra)}")
    n = g.torus_rank
    env = {}
    for k, v in d.get("params", {}).items():
        env[k] = linear_form(v) if isinstance(v, list) else parse_polynomial(v, n, env)
    gens = {}
    for name, rec in d["generators"].items():
        table = rec["table"] if isinstance(rec, dict) and "table" in rec else rec
        gens[name] = class_from_strings(g, table, env)
    return Presentation(gens, list(d.get("relations", [])), env, d.get("max_degree", 12))


def _generator_monomials(gens, d):
    """Exponent tuples over the generators with total degree <= d."""
    names = list(gens)
    degs = [gens[k].degree() for k in names]
    out = []

    def rec(i, left, acc):
        if i == len(names):
            out.append(tuple(acc))
            return
        k = 0
        while k * degs[i] <= left:
            rec(i + 1, left - k * degs[i], acc + [k])
            k += 1
            if degs[i] <= 0:
                break

    rec(0, d, [])
    return names, degs, out


@dataclass
class PresentationReport:
    generators_ok: dict
    relations: dict  # expr -> bool
    degrees: dict  # d -> {"rank": r, "spanned": s}

    @property
    def ok(self):
        return (all(self.generators_ok.values()) and all(self.relations.values())
                and all(x["rank"] == x["spanned"] for x in self.degrees.values()))

    def to_dict(self):
        return {"ok": self.ok, "generators": self.generators_ok, "relations": self.relations,
                "degrees": {str(k): v for k, v in self.degrees.items()}}


def verify_presentation(g, p: Presentation, max_degree: int | None = None) -> PresentationReport:
    D = p.max_degree if max_degree is None else max_degree
    gen_ok = {k: is_class(g, c) for k, c in p.generators.items()}
    if not all(gen_ok.values()):
        bad = [k for k, v in gen_ok.items() if not v]
        raise NotAClassError(f"generator tables fail the congruences: {bad}")
    for k, c in p.generators.items():
        if not c.is_homogeneous() or c.degree() <= 0:
            raise ValueError(f"generator {k} must be homogeneous of positive degree")
    rels = {}
    for r in p.relations:
        val = p.evaluate(r)
        if isinstance(val, EquivariantClass):
            rels[r] = val.is_zero()
        else:
            rels[r] = (val == 0)
    n = g.torus_rank
    names, degs, exps = _generator_monomials(p.generators, D)
    one = EquivariantClass.constant(g, 1)
    powers = {}

    def gen_monomial(ex):
        if ex not in powers:
            out = one
            for name, k in zip(names, ex):
                if k:
                    out = out * p.generators[name] ** k
            powers[ex] = out
        return powers[ex]

    degrees = {}
    for d in range(0, D + 1, 2):
        m = d // 2
        ech = Echelon(len(g.vertices) * len(monomials(n, m)))
        for ex in exps:
            gd = sum(k * dg for k, dg in zip(ex, degs))
            if gd > d:
                continue
            base_deg = (d - gd) // 2
            mono = gen_monomial(ex)
            for be in monomials(n, base_deg):
                ech.add((Polynomial(n, {be: 1}) * mono).vector(m))
        degrees[d] = {"rank": component_rank(g, d), "spanned": ech.rank}
    return PresentationReport(gen_ok, rels, degrees)


def integral_spanning_check(g, p: Presentation, max_degree: int = 8) -> dict:
    """Integral check: the integer tables built from generator monomials times
    integer base monomials span a saturated lattice of full rank.

    Saturation (all Smith invariant factors equal to 1) means the Z-span
    contains every integral point of its Q-span, so an integral spanning set
    of the degree-d component exists.  Valid when every edge label is primitive.
    """
    n = g.torus_rank
    names, degs, exps = _generator_monomials(p.generators, max_degree)
    out = {}
    for d in range(0, max_degree + 1, 2):
        m = d // 2
        vecs = []
        for ex in exps:
            gd = sum(k * dg for k, dg in zip(ex, degs))
            if gd > d:
                continue
            mono = EquivariantClass.constant(g, 1)
            for name, k in zip(names, ex):
                mono = mono * p.generators[name] ** k
            for be in monomials(n, (d - gd) // 2):
                vecs.append((Polynomial(n, {be: 1}) * mono).vector(m))
        integral = all(x.denominator == 1 for v in vecs for x in v)
        r = component_rank(g, d)
        if not integral:
            out[d] = {"ok": False, "reason": "non-integral generator table"}
            continue
        # drop exact zero vectors; SNF on the rest
        mat = [[int(x) for x in v] for v in vecs if any(v)]
        factors = lattice.invariant_factors(mat) if mat else []
        out[d] = {"ok": len(factors) == r and all(f == 1 for f in factors),
                  "rank": r, "invariant_factors": factors}
    return out


# --- catalog presentations ---

def catalog_presentation(kind: str, a, b, c=None, k=None):
    """(graph, Presentation, ordinary bases) for the named type.

    The bases map "H2"/"H4" to the classes used to read off c1 and p1.
    """
    from .constructions import catalog
    a, b = lattice.Weight(a), lattice.Weight(b)
    A, B = linear_form(a), linear_form(b)
    env = {"a": A, "b": B}
    if kind == "P1":
        c = lattice.Weight(c)
        C = linear_form(c)
        env["c"] = C
        g = catalog("P1", -a, -b, c=-c)
        xi = {"p1": 0, "p2": A, "p3": B, "p4": C}
        gens = {"xi": xi}
        rels = ["xi*(xi-a)*(xi-b)*(xi-c)"]
    elif kind == "P2":
        g = catalog("P2", a, b)
        gens = {"xi": {"p1": 0, "p2": A, "p3": B, "p4": -A - B}}
        rels = ["xi*(xi-a)*(xi-b)*(xi+a+b)"]
    elif kind == "P3":
        g = catalog("P3", a, b)
        gens = {"xi": {"p1": 0, "p2": A, "p4": B, "p3": A + B}}
        rels = ["xi*(xi-a)*(xi-b)*(xi-a-b)"]
    elif kind == "Q1":
        g = catalog("Q1", a, b)
        gens = {"xi": {"p1": A, "p2": B, "p4": -B, "p3": -A},
                "eta": {"p1": A * (A + B), "p2": B * (A + B), "p3": 0, "p4": 0}}
        rels = ["2*eta-(xi+a)*(xi+b)", "eta*(eta-(a+b)*xi)"]
    elif kind == "Q2":
        g = catalog("Q2", a, b)
        gens = {"xi": {"p1": -A, "p2": -B, "p4": B, "p3": A},
                "eta": {"p1": A * (A + B), "p2": B * (A + B), "p3": 0, "p4": 0}}
        rels = ["2*eta-(xi-a)*(xi-b)", "eta*(eta+(a+b)*xi)"]
    elif kind == "S":
        g = catalog("S", a, b, k=k)
        s = a + b
        cw, dw = a - k * s, b + k * s
        Cc, Dd = linear_form(cw), linear_form(dw)
        delta = divide_by_linear(A * B - Cc * Dd, s)
        assert delta is not None
        env.update({"c": Cc, "d": Dd, "delta": delta})
        gens = {"xi": {"p1": A + B, "p2": 0, "p3": A + B, "p4": 0},
                "eta": {"p1": 0, "p2": 0, "p3": A * B, "p4": Cc * Dd}}
        rels = ["xi^2-(a+b)*xi", "eta^2-c*d*eta-delta*xi*eta"]
    else:
        raise ValueError(f"no presentation for {kind!r}")
    gens = {name: EquivariantClass(g, t) for name, t in gens.items()}
    pres = Presentation(gens, rels, env, 12)
    xi = gens["xi"]
    bases = {"H2": [xi], "H4": [gens["eta"]] if kind == "S" else [xi * xi]}
    return g, pres, bases


def class_to_json(c: EquivariantClass) -> str:
    return json.dumps(c.to_dict(), sort_keys=True)
