"""Equivariant cohomology of a graph and integration by localization."""

from gkm import catalog, chern_data, hilbert_series, ordinary_poincare, integrate
from gkm.chern import equivariant_chern, euler_class
from gkm.cohomology import EquivariantClass, catalog_presentation, verify_presentation, class_basis

p2 = catalog("P2", (1, 0), (0, 1))

# ranks of H_T in degrees 0, 2, 4, ...: a free module on generators in degrees 0, 2, 4, 6
print(hilbert_series(p2, 12))
print(ordinary_poincare(p2, 6))   # Betti numbers of the manifold

# a basis of the degree-2 classes, as vertex tables of polynomials
for c in class_basis(p2, 2):
    print(c)

# Chern numbers: sum over fixed points of c(p) / e(p)
data = chern_data(p2)
print(data.to_dict())

c1 = equivariant_chern(p2, 1)
print(integrate(p2, c1 * c1 * c1))     # -8
print(integrate(p2, c1 * c1))          # degree 4 < 6, so 0

# the Thom class of one fixed point integrates to 1
point = EquivariantClass(p2, {v: (euler_class(p2, v) if v == "p1" else 0) for v in p2.vertices})
print(integrate(p2, point))

# ring presentations are checked degree by degree
g, pres, bases = catalog_presentation("Q1", (1, 0), (0, 1))
print(pres.relations)
print(verify_presentation(g, pres, 12).to_dict())
