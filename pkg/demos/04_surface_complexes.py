"""The two built-in cell complexes and the surface classifier.

For four planar unit vectors the space of frame classes is a graph: six
circles with marked points merged in pairs, giving twelve 4-valent
vertices on twenty-four edges.  For five vectors it is a closed surface
glued from sixteen 20-gons.  The generic engine answers the closed /
orientable / connected / genus questions for any labeled 2-complex, so
small fixtures double as sanity checks.
"""

import framelab as fl

g42 = fl.build_g42()
print("four-vector class graph:", fl.surface_report(g42))
deg = {v: 0 for v in g42.vertices}
for a, b in g42.edges.values():
    deg[a] += 1
    deg[b] += 1
print("vertex degrees:", sorted(set(deg.values())))

g52 = fl.build_g52()
rep = fl.surface_report(g52)
print("\nfive-vector class complex:", rep)
print("16 - 160 + 96 =", rep.euler)
print("NOTE: the gluing tables force both faces of every edge to traverse it")
print("in the same direction, so no coherent orientation exists; the complex")
print("is the closed connected non-orientable surface with Euler number -48.")

# the classifier on standard fixtures
torus = fl.Complex2(
    {"v"},
    {"A": ("v", "v"), "B": ("v", "v")},
    {"F": (("A", 1), ("B", 1), ("A", -1), ("B", -1))},
)
print("\ntorus fixture:", fl.surface_report(torus))

klein = fl.Complex2(
    {"v"},
    {"A": ("v", "v"), "B": ("v", "v")},
    {"F": (("A", 1), ("B", 1), ("A", 1), ("B", -1))},
)
print("klein fixture:", fl.surface_report(klein))

print("\ncomponents of the four-vector graph:",
      len(fl.connected_components(g42)))
