"""Automorphisms of GKM graphs and their action on cohomology."""

from gkm import catalog, gkm_automorphisms, aut_star, induced_action

for k in (0, 1):
    g = catalog("S", (1, 0), (0, 1), k=k)
    group = gkm_automorphisms(g)
    star = aut_star(g, group)
    print(f"S(k={k}): |Aut| = {group.order}, |Aut*| = {star.order}")
    for a in group.elements:
        print("  ", a.cycles(), [list(r) for r in a.psi], "on H^2:", induced_action(g, a, 2))

# P1 with its weights spanning Z^3 has the symmetric group on four points
print(gkm_automorphisms(catalog("P1", (1, 0, 0), (0, 1, 0), c=(0, 0, 1))).order)
