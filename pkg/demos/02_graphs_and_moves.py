"""
Building labeled graphs move by move
====================================

The five-vertex running example: validation, saturation deficits,
admissible neighbor labels, welding, flipping, and DOT export.
"""

from bsx import (
    BSParams,
    MnGraph,
    admissible_neighbor_labels,
    flip,
    graph_phenotype,
    graph_to_dot,
    saturation_report,
    validate,
    weld,
)

params = BSParams(2, 3)

# Labels 8, 4, 6, 4, 9; the 6 feeds both 4s, the 9 feeds the 6 twice,
# one 4 feeds the 8.  This is the quotient graph of a genuine transitive
# pre-action on 31 points.
g = MnGraph(
    params,
    vertices={"e": 8, "a": 4, "b": 6, "c": 4, "d": 9},
    pos_edges={
        "b_a1": ("b", "a"),
        "b_a2": ("b", "a"),
        "b_c": ("b", "c"),
        "d_b1": ("d", "b"),
        "d_b2": ("d", "b"),
        "a_e": ("a", "e"),
    },
)

print("valid:", validate(g).ok)
print("phenotype per component:", dict(graph_phenotype(g)))

report = saturation_report(g)
print("\nper-vertex deficits (missing out, missing in):")
for v, deficit in sorted(report.deficits.items()):
    print(f"  {v} (label {g.vertices[v]}): {deficit}")

# What could a new neighbor of the 6 look like?  One edge out of a
# label-3 vertex allows targets 1 and 2; out of a 6 the target must be 4.
print("\nout of label 3:", admissible_neighbor_labels(params, 3, "outgoing"))
print("out of label 6:", admissible_neighbor_labels(params, 6, "outgoing"))
print("into label 1:  ", admissible_neighbor_labels(params, 1, "incoming"))

# Welding identifies two same-labeled vertices whose degrees fit.
two = MnGraph(params, {"u": 5, "v": 5}, {})
print("\nweld two 5s:", sorted(weld(two, "u", "v").vertices))

# Flipping reverses the edges and swaps the roles of m and n.
flipped = flip(g)
print("\nflipped parameters:", (flipped.params.m, flipped.params.n))
print("flipped still valid:", validate(flipped).ok)

print("\nDOT export:")
print(graph_to_dot(g))
