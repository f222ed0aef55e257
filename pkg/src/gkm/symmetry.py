"""GKM-graph automorphisms, their action on ordinary cohomology, and Aut*."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import lattice
from .cohomology import EquivariantClass, _ideal_vectors, class_basis, ordinary_image
from .linalg import Echelon
from .graph import iter_isomorphisms
from .polyring import monomials


@dataclass(frozen=True)
class GkmAutomorphism:
    """phi on vertices and edges (edge -> (edge, sign)) with psi on the lattice.

    sign = -1 means phi reverses the stored orientation of that edge.
    """
    vertex_map: tuple  # sorted (v, phi(v)) pairs
    edge_map: tuple  # sorted (e, (f, sign)) pairs
    psi: tuple

    @property
    def vmap(self):
        return dict(self.vertex_map)

    @property
    def emap(self):
        return dict(self.edge_map)

    def key(self):
        return (tuple(w for _, w in self.vertex_map), tuple(map(tuple, self.psi)))

    def compose(self, other: "GkmAutomorphism") -> "GkmAutomorphism":
        """self after other."""
        va, vb = self.vmap, other.vmap
        ea, eb = self.emap, other.emap
        vm = tuple(sorted((v, va[vb[v]]) for v in vb))
        em = []
        for e, (f, s1) in sorted(eb.items()):
            h, s2 = ea[f]
            em.append((e, (h, s1 * s2)))
        psi = tuple(map(tuple, lattice.matmul([list(r) for r in self.psi], [list(r) for r in other.psi])))
        return GkmAutomorphism(vm, tuple(em), psi)

    def inverse(self) -> "GkmAutomorphism":
        vm = tuple(sorted((w, v) for v, w in self.vertex_map))
        em = tuple(sorted((f, (e, s)) for e, (f, s) in self.edge_map))
        inv = _integer_inverse([list(r) for r in self.psi])
        return GkmAutomorphism(vm, em, tuple(map(tuple, inv)))

    def cycles(self) -> str:
        m = self.vmap
        seen = set()
        out = []
        for v in sorted(m):
            if v in seen or m[v] == v:
                seen.add(v)
                continue
            cyc = [v]
            seen.add(v)
            w = m[v]
            while w != v:
                cyc.append(w)
                seen.add(w)
                w = m[w]
            out.append("(" + " ".join(cyc) + ")")
        return "".join(out) or "()"

    def is_identity(self) -> bool:
        n = len(self.psi)
        return (all(v == w for v, w in self.vertex_map) and all(e == f and s == 1 for e, (f, s) in self.edge_map)
                and [list(r) for r in self.psi] == lattice.identity(n))

    def to_dict(self):
        return {"permutation": self.cycles(), "psi": [list(r) for r in self.psi]}


def _integer_inverse(m):
    from .linalg import solve
    n = len(m)
    cols = []
    for j in range(n):
        e = [Fraction(int(i == j)) for i in range(n)]
        x = solve([[Fraction(v) for v in row] for row in m], e)
        cols.append([int(v) for v in x])
    return lattice.transpose(cols)


@dataclass
class AutomorphismGroup:
    elements: list
    generators: list

    @property
    def order(self) -> int:
        return len(self.elements)

    def to_dict(self):
        return {"order": self.order, "generators": [a.to_dict() for a in self.generators]}


def _as_aut(iso):
    return GkmAutomorphism(tuple(sorted(iso.vertex_map.items())),
                           tuple(sorted(iso.edge_map.items())), iso.psi)


class UnderdeterminedError(ValueError):
    pass


def gkm_automorphisms(g) -> AutomorphismGroup:
    try:
        isos = list(iter_isomorphisms(g, g, allow_lattice_change=True))
    except ValueError as exc:
        raise UnderdeterminedError(str(exc)) from None
    found = {}
    by_phi = {}
    for iso in isos:
        a = _as_aut(iso)
        found.setdefault(a.key(), a)
        phi = (a.vertex_map, a.edge_map)
        by_phi.setdefault(phi, set()).add(a.psi)
    for phi, psis in by_phi.items():
        # psi is pinned by phi when the weights span the lattice
        assert len(psis) == 1, f"psi not determined by phi: {psis}"
    elems = sorted(found.values(), key=lambda a: a.key())
    return AutomorphismGroup(elems, _generators(elems))


def _closure(gens, ident):
    out = {ident.key(): ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = s.compose(x)
                if y.key() not in out:
                    out[y.key()] = y
                    nxt.append(y)
        frontier = nxt
    return out


def _generators(elems):
    ident = next(a for a in elems if a.is_identity())
    gens = []
    span = {ident.key(): ident}
    for a in elems:
        if a.key() not in span:
            gens.append(a)
            span = _closure(gens, ident)
    return gens


def check_group(elements) -> bool:
    """Closure, identity and inverses (a full multiplication table check)."""
    keys = {a.key() for a in elements}
    if not any(a.is_identity() for a in elements):
        return False
    for a in elements:
        if a.inverse().key() not in keys:
            return False
        for b in elements:
            if a.compose(b).key() not in keys:
                return False
    return True


def ordinary_basis(g, degree: int) -> list[EquivariantClass]:
    """Classes whose images form a basis of H^d(M) = H^d_T / (H^{>0}(BT) H_T)."""
    m = degree // 2
    ideal = Echelon(len(g.vertices) * len(monomials(g.torus_rank, m)))
    for v in _ideal_vectors(g, degree):
        ideal.add(v)
    out = []
    for c in class_basis(g, degree):
        if ideal.add(c.vector(m)):
            out.append(c)
    return out


def act_on_class(a: GkmAutomorphism, c: EquivariantClass) -> EquivariantClass:
    """(a . xi)(phi(p)) = psi(xi(p))."""
    return c.act(a.vmap, [list(r) for r in a.psi])


def induced_action(g, a: GkmAutomorphism, degree: int, basis=None):
    """Matrix of a on H^d(M); column j holds the image of basis[j]."""
    if degree == 0:
        return [[Fraction(1)]]
    basis = ordinary_basis(g, degree) if basis is None else list(basis)
    if not basis:
        return []
    cols = [ordinary_image(g, act_on_class(a, b), basis) for b in basis]
    return lattice.transpose(cols)


def acts_trivially(g, a, degrees=(2, 4, 6), bases=None) -> bool:
    for d in degrees:
        m = induced_action(g, a, d, None if bases is None else bases.get(d))
        if m != [[int(i == j) for j in range(len(m))] for i in range(len(m))]:
            return False
    return True


def aut_star(g, group: AutomorphismGroup | None = None) -> AutomorphismGroup:
    """Automorphisms acting trivially on H^2, H^4, H^6 of the ordinary quotient."""
    group = gkm_automorphisms(g) if group is None else group
    degrees = [d for d in (2, 4, 6) if d <= 2 * g.valence]
    bases = {d: ordinary_basis(g, d) for d in degrees}
    elems = [a for a in group.elements if acts_trivially(g, a, degrees, bases)]
    return AutomorphismGroup(elems, _generators(elems))
