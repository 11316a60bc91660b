# A uniquely 4-colourable triangulation and its 24 colourings
#
# Run with `python3 notebooks/02_base_triangulation.py`.

# %%
from collections import Counter

from slabelcol import base_triangulation, faces, is_uniquely_k_colourable, lemma1_graph
from slabelcol.construct import four_colourings

g = base_triangulation()
print(g.num_vertices(), "vertices,", g.num_edges(), "edges,", len(faces(g)), "faces")

# Stacking a vertex into a triangle leaves it exactly one colour, so the
# whole colouring is fixed by the first triangle: 4 * 3 * 2 = 24 colourings.

# %%
cols = four_colourings(g)
print(len(cols), "colourings; uniquely colourable:", is_uniquely_k_colourable(g, 4))
print("first:", [cols[0][v] for v in g.vertices])
print("last: ", [cols[-1][v] for v in g.vertices])

# %%
# Each face gets its own colouring. Faces whose corners miss colour 4 are
# usable directly; the others get a vertex stacked inside, and the sub-face
# avoiding colour 4 takes over.

gp, fmap = lemma1_graph()
print(Counter("fixed up" if e.z is not None else "as is" for e in fmap))
print(gp.num_vertices(), "vertices after fix-up")

# %%
walks = {f.face: f.boundary for f in faces(gp)}
for e in list(fmap)[:5]:
    print(e.face, [e.phi[v] for v in walks[e.face]], "v1, v2, v3 =", (e.v1, e.v2, e.v3))
