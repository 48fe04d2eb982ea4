"""
Edge counts of the real dessin
==============================

For a maximal system, the rational map behind the Gale polynomial has a
real dessin whose combinatorics are fixed by the relation alone.
"""

from galecircuit import edge_counts, emit_graph, letter_layout

prof = edge_counts((3, -7, 6, -3, 1))
print("valencies:", prof.valencies)
print("non-real edges between neighbours:", prof.edge_counts)

lay = letter_layout(prof)
for g in lay.gaps:
    print(f"gap x{g.gap}-x{g.gap + 1}: {g.pairs} conjugate pairs, r marks {g.r_marks}")
print("letters r:", lay.total_r, "= degree", prof.degree)

# DOT text can be piped to graphviz.
print(emit_graph(prof))

# A relation failing the running-sum test has no valid profile.
try:
    edge_counts((2, -2, 2, -2))
except Exception as e:
    print(type(e).__name__, e)
