"""From fixed-point weights back to graphs, and the Chern-number certificate."""

import json

from gkm import case_weights, enumerate_graphs, distinctness_certificate, catalog, isomorphic
from gkm.lattice import Weight

a, b = Weight((1, 0)), Weight((0, 1))

wd = case_weights("B", a=a, b=b)
print(wd.to_dict())
found = enumerate_graphs(wd)
print(len(found), isomorphic(found[0], catalog("Q1", a + b, b)) is not None)

# case D admits several graphs; S(k) is among them
for g in enumerate_graphs(case_weights("D", a=a, b=b, k=1)):
    print(isomorphic(g, catalog("S", a, b, k=1)) is not None, g.to_json())

# circle weights: one pair (int c1c2, int c1^3) per case
print(json.dumps(distinctness_certificate(), indent=2, default=str))
