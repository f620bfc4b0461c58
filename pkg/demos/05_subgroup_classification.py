"""
Classifying points of the subgroup space
========================================

Quotient actions as concrete subgroups, membership in the maximal
compact piece, and certified perfect-kernel verdicts.
"""

from bsx import (
    BSParams,
    MnGraph,
    bass_serre,
    classify_kernel,
    conjugate,
    mcq_member,
    parse_word,
    pointed_eq_R,
    quotient_action,
    stabilizer_contains,
    subgroup_phenotype,
    triangle_preaction,
)

params = BSParams(2, 3)

# The quotient by the normal closure of b^5, truncated to 7 t-levels:
# one b-orbit of size 5 on every level.
pointed = quotient_action(params, 5, window=3)
print("phenotype:", subgroup_phenotype(pointed))
print("contains b^5:", stabilizer_contains(pointed, parse_word("b^5")))
print("contains b^4:", stabilizer_contains(pointed, parse_word("b^4")))
print("in the maximal compact piece:", mcq_member(pointed))

# Conjugation moves the basepoint; the phenotype is conjugation-invariant.
moved = conjugate(pointed, parse_word("b t"))
print("phenotype after conjugating:", subgroup_phenotype(moved))

# Different moduli are told apart at a finite radius.
other = quotient_action(params, 7, window=6)
big = quotient_action(params, 5, window=6)
print("\nq=5 vs q=7 agree at radius 2:", pointed_eq_R(big, other, 2))
print("q=5 vs q=7 agree at radius 5:", pointed_eq_R(big, other, 5))

# Kernel verdicts come with certificates.  A label like 10 (its 2-part
# beats both parameters) forces unbounded growth in any completion.
print("\nten:", classify_kernel(MnGraph(params, {"v": 10}, {})).as_json())
print("ones:", classify_kernel(MnGraph(params, {"u": 1, "v": 1}, {})).as_json())
print("quotient data:", classify_kernel(pointed.pre).as_json())

# The triangle: three orbits of sizes 3p, p, 2p wired so that the word
# t t b t^-1 b fixes the basepoint, one for every prime p outside {2,3}.
for p in (5, 7, 11):
    tri = triangle_preaction(params, p)
    g = bass_serre(tri.pre)
    print(
        f"\ntriangle p={p}: labels {sorted(g.vertices.values())}, "
        f"stabilizer word: {stabilizer_contains(tri, parse_word('t t b T b'))}"
    )
