"""Equivariant Chern classes and fixed-point localization.

All functions accept anything exposing ``vertices``, ``torus_rank`` and
``weights(p)``: GKM graphs, and bare weight data such as circle-action
weights that do not form a graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cohomology import EquivariantClass
from .polyring import Polynomial, divide_by_linear, elementary_symmetric, linear_form


class LocalizationError(ValueError):
    pass


def _valence(g):
    degs = {len(g.weights(p)) for p in g.vertices}
    if len(degs) != 1:
        raise ValueError("weight data is not regular")
    return degs.pop()


def equivariant_chern(g, i: int) -> EquivariantClass:
    """c_i^T: p -> e_i(Lambda_p)."""
    n = g.torus_rank
    return EquivariantClass(g, {p: elementary_symmetric(g.weights(p), i, nvars=n) for p in g.vertices})


def euler_class(g, p) -> Polynomial:
    out = Polynomial.one(g.torus_rank)
    for w in g.weights(p):
        out = out * linear_form(w)
    return out


def localize(g, c) -> Polynomial:
    """sum_p c(p) / e(p), returned as an exact polynomial.

    The sum is put over the product of all vertex Euler classes and the
    numerator is divided by each linear factor in turn; a failed division
    means the sum is not a polynomial (c is not a class of the graph).
    """
    vals = c.values if isinstance(c, EquivariantClass) else c
    n = g.torus_rank
    eul = {p: euler_class(g, p) for p in g.vertices}
    num = Polynomial.zero(n)
    for p in g.vertices:
        term = vals[p] if isinstance(vals[p], Polynomial) else Polynomial.constant(n, vals[p])
        for q in g.vertices:
            if q != p:
                term = term * eul[q]
        num = num + term
    for p in g.vertices:
        for w in g.weights(p):
            q = divide_by_linear(num, w)
            if q is None:
                raise LocalizationError(f"localization sum has a pole along {list(w)}")
            num = q
    return num


def integrate(g, c, expect_integer: bool = False) -> Fraction:
    """ABBV localization of c; the result must be a constant."""
    val = localize(g, c)
    if not val.is_constant():
        raise LocalizationError(f"integral is not constant: {val}")
    out = val.constant_value()
    if expect_integer and out.denominator != 1:
        raise LocalizationError(f"integral {out} is not an integer")
    return out


@dataclass
class ChernData:
    c1: EquivariantClass
    c2: EquivariantClass
    c3: EquivariantClass
    c1_cubed: int
    c1c2: int
    c3_number: int

    @property
    def todd(self) -> Fraction:
        return Fraction(self.c1c2, 24)

    def numbers(self):
        return (self.c1_cubed, self.c1c2, self.c3_number)

    def to_dict(self):
        return {"c1^3": str(self.c1_cubed), "c1c2": str(self.c1c2), "c3": str(self.c3_number),
                "todd": str(self.todd)}


def chern_data(g) -> ChernData:
    if _valence(g) != 3:
        raise ValueError("Chern numbers are defined here for 3-valent data (real dimension 6)")
    c1, c2, c3 = (equivariant_chern(g, i) for i in (1, 2, 3))
    nums = (int(integrate(g, x, expect_integer=True)) for x in (c1 * c1 * c1, c1 * c2, c3))
    return ChernData(c1, c2, c3, *nums)


def chern_numbers(g):
    """(int c1^3, int c1 c2, int c3)."""
    return chern_data(g).numbers()


def todd(g) -> Fraction:
    return chern_data(g).todd


def pontryagin(g) -> EquivariantClass:
    """p1^T = (c1^T)^2 - 2 c2^T."""
    c1 = equivariant_chern(g, 1)
    return c1 * c1 - 2 * equivariant_chern(g, 2)
