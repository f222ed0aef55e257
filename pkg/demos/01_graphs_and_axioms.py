"""Building GKM graphs, checking the axioms, and comparing graphs."""

from gkm import catalog, validate, isomorphic, connections_along
from gkm.graph import Edge, GkmGraph

# the round 6-sphere: two fixed points joined by three edges
s6 = catalog("S6", (1, 0), (0, 1))
print(s6.to_json(indent=2))
print(s6.weights("n"), s6.weights("s"))  # weights at the north and south poles

report = validate(s6, check_effective=True)
print("valid:", report.valid, "effective:", report.effective.ok)

# a broken graph: two parallel weights at p
bad = GkmGraph(2, ["p", "q"], [Edge("e1", "p", "q", (1, 0)), Edge("e2", "p", "q", (2, 0))])
print(validate(bad).to_dict()["independence"])

# each edge carries one or more congruence bijections between its end-point weights
q1 = catalog("Q1", (1, 0), (0, 1))
for e in q1.edges:
    print(e.id, list(e.weight), connections_along(q1, e.id))

# relabel the lattice by an integer matrix: still the same graph up to GL(2, Z)
shear = [[1, 1], [0, 1]]
print(isomorphic(q1, q1.map_weights(shear)))                      # None with the lattice held fixed
print(isomorphic(q1, q1.map_weights(shear), allow_lattice_change=True).psi)
