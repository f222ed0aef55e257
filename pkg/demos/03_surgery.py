"""Blow-ups and gluing on the graph level."""

from gkm import catalog, blowup_vertex, blowup_edge, glue_s6, isomorphic, chern_numbers

a, b = (1, 0), (0, 1)
s6 = catalog("S6", a, b)

# cutting off the north pole gives the graph of type P2
bl = blowup_vertex(s6, "n")
print(bl.vertices)
print(isomorphic(bl, catalog("P2", a, b)) is not None, chern_numbers(bl))

# cutting along the edge labeled a+b gives type Q2
edge = next(e.id for e in s6.edges if tuple(e.weight) == (1, 1))
print(isomorphic(blowup_edge(s6, edge), catalog("Q2", a, b)) is not None)

# gluing two spheres whose cut edges carry the same label a+b
for k in range(3):
    c, d = (1 - k, -k), (k, 1 + k)
    glued = glue_s6(s6, catalog("S6", c, d))
    print(k, isomorphic(glued, catalog("S", a, b, k=k)) is not None, chern_numbers(glued))
