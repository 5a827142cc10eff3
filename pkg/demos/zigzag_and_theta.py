# coding: utf-8

# # Zig-zag algebras and glued trees
#
# A multigraph gives a zig-zag algebra: idempotents, one arrow each way along
# every edge and a loop at each vertex that has a neighbour.

# In[1]:

from pathlib import Path

from coxkit import (ade_catalog, bipartite_ade, build_theta, build_zigzag, cartan_matrix,
                    graded_cartan_matrix, load_diagram, load_multigraph, two_rep_category)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

a3 = load_multigraph(FIXTURES / "omega_a3.graph")
alg = build_zigzag(a3)
print(alg.dimension)
print(cartan_matrix(a3))
print(graded_cartan_matrix(a3).to_text(list(a3.vertices)))


# ## ADE diagrams with a given Coxeter number
#
# Each tree comes with a two-colouring; both colourings are listed unless a
# symmetry swaps them.

# In[2]:

for n in (4, 12, 18):
    for entry in ade_catalog(n):
        print(n, entry.name, entry.class_s, entry.class_t)


# ## Gluing
#
# Take the path s - ts - sts, coloured so that s and sts are on one side.
# Every vertex on that side gets a copy of the cell tree for s, and ts gets
# the cell tree for t.

# In[3]:

d = load_diagram(FIXTURES / "edq7.cox")
omega = bipartite_ade(a3, ["s", "sts"])
theta = build_theta(d, omega)
print(len(theta.vertices), "vertices", len(theta.edges), "edges")
for v in theta.vertices:
    print(f"  {v:8} {theta.origin[v]}")


# In[4]:

print(theta.to_dot())
print(two_rep_category(d, omega).dimension)
