"""
Pre-actions and word rewriting
==============================

From a labeled graph to a concrete pre-action and back, evaluating
words at points, and the pinch-free normal form machinery.
"""

from bsx import (
    BSParams,
    MnGraph,
    bass_serre,
    britton_reduce,
    commute_power,
    evaluate,
    isomorphic,
    parse_word,
    realize,
    t_stats,
)

params = BSParams(2, 3)

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

# Realize the graph: one point per unit of label, 8+4+6+4+9 = 31 points.
pa = realize(g)
print("points:", pa.n_points, "| kind:", pa.kind)
print("round trip is isomorphic:", isomorphic(bass_serre(pa), g))

# Words act on the right: letters apply left to right, t-steps are
# partial and may leave the data.
print("\n0 . b   =", evaluate(pa, 0, parse_word("b")))
print("0 . b^8 =", evaluate(pa, 0, parse_word("b^8")))
print("0 . t t =", evaluate(pa, 0, parse_word("t t")))  # None once truncated

# The defining relation rewrites t b^2 t^-1 into b^3 and nested pinches
# collapse from the inside out.
print("\nreduce t b^2 T      ->", britton_reduce(params, parse_word("t b^2 T")))
print("reduce t t b^2 T b T ->", britton_reduce(params, parse_word("t t b^2 T b T")))
print("t-stats of t b t B T:", t_stats(params, parse_word("t b t B T")))

# Conjugating a divisible-enough power of b through a word only shifts
# valuations: t b^6 t^-1 = b^9.
print("\nt b^6 t^-1   = b^%d" % commute_power(params, parse_word("t"), 6))
print("t^-1 b^6 t   = b^%d" % commute_power(params, parse_word("T"), 6))
