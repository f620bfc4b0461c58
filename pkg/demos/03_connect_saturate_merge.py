"""
Connecting, saturating, merging
===============================

The three constructions that let any two same-phenotype fragments live
inside a single transitive object.
"""

from bsx import (
    BSParams,
    MnGraph,
    connect_path,
    forest_saturate,
    graph_phenotype,
    merge_graphs,
    validate,
)

params = BSParams(2, 3)

# A simple path between two labels exists exactly when their phenotypes
# agree; end orientations can be prescribed freely.
res = connect_path(params, 4, 9, "+", "+")
print("path from 4 to 9:")
for e, (s, t) in sorted(res.graph.pos_edges.items()):
    print(f"  {res.graph.vertices[s]} -> {res.graph.vertices[t]}")
print("valid:", validate(res.graph).ok)

# Requesting a backwards arrival forces a detour vertex.
res = connect_path(params, 1, 1, "+", "-")
print("\npath from 1 to 1 arriving against the orientation:")
for e, (s, t) in sorted(res.graph.pos_edges.items()):
    print(f"  {res.graph.vertices[s]} -> {res.graph.vertices[t]}")

# Forest-saturation repairs all current deficits each round; only the
# newest layer can still be deficient.
seed = MnGraph(params, {"v": 1}, {})
for rounds in (1, 2, 3):
    grown, frontier = forest_saturate(seed, rounds)
    print(
        f"\nafter {rounds} round(s): {len(grown.vertices)} vertices, "
        f"{len(grown.pos_edges)} edges, frontier {len(frontier)}"
    )

# Merging: connect free slots, weld, saturate.  Both inputs embed
# disjointly and the result is connected with the same phenotype.
g1 = MnGraph(params, {"u": 5}, {})
g2 = MnGraph(params, {"u": 5, "w": 15}, {"e": ("w", "u")})
merged = merge_graphs(g1, g2, rounds=1)
print("\nmerged:", len(merged.graph.vertices), "vertices; phenotype",
      list(graph_phenotype(merged.graph).values()))
print("copy of g1 lives at:", merged.embed1)
print("copy of g2 lives at:", merged.embed2)
