# coding: utf-8

# # The tree of a left cell and how generators act on it
#
# The rigid words ending in a fixed letter form a tree: strip the first letter
# and you land on the parent.  Each generator acts on the span of those words
# by an integer matrix, and the grading lifts it to Laurent polynomials.

# In[1]:

from pathlib import Path

from coxkit import action_matrix, graded_action_matrix, lambda_graph, load_diagram
from coxkit import verify_cell_representation

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
d = load_diagram(FIXTURES / "edq7.cox")


# In[2]:

lam = lambda_graph(d, "s")
print([lam.name(w) for w in lam.vertices])
for upper, lower, label in lam.edges:
    print(f"  {lam.name(upper):5} -> {lam.name(lower):4} via {label}")


# The tree is ready for Graphviz.

# In[3]:

print(lam.to_dot())


# ## Matrices
#
# Column j says what t does to the j-th word.  Words that begin with t
# pick up a 2 on the diagonal, or v + 1/v once graded.

# In[4]:

names = [lam.name(w) for w in lam.vertices]
print(names)
print(action_matrix(d, "s", "t", lam))
print(graded_action_matrix(d, "s", "t", lam).to_text(names))


# ## Relations
#
# Squares, braid relations and positivity are checked in one call.

# In[5]:

report = verify_cell_representation(d, "s")
print(report.ok)
for check, passed in sorted(report.checks.items()):
    print(f"  {check:20} {passed}")
