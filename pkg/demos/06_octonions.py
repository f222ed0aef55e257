"""Exact octonions and the almost complex structures on S^6 and S^2 x S^4."""

import random

from gkm import octonion as oc
from gkm.octonion import Octonion, mul

e = Octonion.basis
print(mul(e(1), e(2)), mul(e(2), e(1)))              # e3, -e3
print(mul(e(1), e(6), "I"), mul(e(1), e(6), "II"))   # the two tables differ
print(oc.associator(e(1), e(2), e(4)))               # not associative

# iso_13 carries one multiplication to the other
x, y = Octonion([1, 2, 0, 0, 1, 0, 3, 1]), Octonion([0, 1, 1, 0, 0, 2, 0, 1])
print(oc.iso_13(mul(x, y, "I")) == mul(oc.iso_13(x), oc.iso_13(y), "II"))

# J_u(v) = u v on the tangent space of S^6, at a rational point
rng = random.Random(0)
u = oc.random_s6_point(rng)
v = oc.random_s6_tangent(rng, u)
jv = oc.s6_tangent_J(u, v)
print(u, jv, oc.s6_tangent_J(u, jv) == -v)

print(oc.oct_check(samples=20)["checks"])
