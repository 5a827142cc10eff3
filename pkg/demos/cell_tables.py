# coding: utf-8

# # Rigid words and the cell table
#
# A rigid word walks along the edges of a Coxeter diagram without ever
# spelling out a full braid.  For a diagram whose small cell is finite we can
# list all of them and group them by first and last letter.

# In[1]:

from pathlib import Path

from coxkit import (cell_table, enumerate_small_cell, finiteness_check, is_rigid, load_diagram,
                    oracle_unique_reduced, parse_word)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


# ## A star with four arms
#
# Vertex 4 sits in the middle; every other vertex hangs off it.

# In[2]:

star = load_diagram(FIXTURES / "ex1.cox")
print(finiteness_check(star).finite)
cell = enumerate_small_cell(star)
print(len(cell.words), "rigid words")


# Row t, column s holds the rigid words starting with t and ending with s.

# In[3]:

print(cell_table(star).to_text())


# ## One labeled edge
#
# Putting a 4 on the edge 2-3 lets words bounce across it once more.

# In[4]:

labeled = load_diagram(FIXTURES / "ex2.cox")
print(cell_table(labeled).to_text())


# ## Why a word fails
#
# `is_rigid` reports where the first problem is.  The braid-move oracle
# gives the same yes/no answer by brute force over the orbit.

# In[5]:

for text in ["2321", "212", "2124", "13"]:
    w = parse_word(labeled, text)
    verdict = is_rigid(labeled, w)
    report = oracle_unique_reduced(labeled, w)
    print(f"{text:6} {report.status.value:16} rigid={verdict.rigid!s:5} {verdict.reason or ''}")
