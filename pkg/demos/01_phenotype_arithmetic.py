"""
Phenotype arithmetic
====================

The invariant that decides which orbit sizes can coexist in one
transitive action, plus the derived quantities: the special divisor s,
the order r(k), confinement bounds and approximation moduli.
"""

from bsx import (
    BSParams,
    INF,
    approximation_level_N,
    confinement_bound_R,
    enumerate_phenotype_preimage,
    order_r,
    phenotype,
    special_divisor_s,
)

# With m = 180 = 2^2 3^2 5 and n = 12 = 2^2 3, only primes where both
# sides carry the same power can survive into the phenotype.
params = BSParams(180, 12)
print("phenotype of 42  =", phenotype(params, 42))    # -> 7
print("phenotype of 672 =", phenotype(params, 672))   # -> 224 = 2^5 * 7
print("phenotype of inf =", phenotype(params, INF))

# For coprime parameters the phenotype just strips the m- and n-primes.
p23 = BSParams(2, 3)
print("\n(2,3)-phenotype of 1..20:", [phenotype(p23, k) for k in range(1, 21)])

# All orbit sizes compatible with phenotype 5, up to 100.  For |m| != |n|
# this list keeps growing with the bound; for |m| = |n| it is finite.
print("\npreimage of 5 under (2,3), k <= 100:", enumerate_phenotype_preimage(p23, 5, 100))
print("preimage of 3 under (2,2), k <= 100:", enumerate_phenotype_preimage(BSParams(2, 2), 3, 100))

# s(q) bounds every orbit size in the maximal compact invariant piece.
print("\ns(5) for (2,3)  =", special_divisor_s(p23, 5))          # coprime case: s = q
print("s(5) for (4,6)  =", special_divisor_s(BSParams(4, 6), 5))
print("s(3) for (2,2)  =", special_divisor_s(BSParams(2, 2), 3))

# r(k) is the order of b once the normal closure of b^k is killed.
print("\nr(8) for (2,4)  =", order_r(BSParams(2, 4), 8))
print("r(12) for (2,3) =", order_r(p23, 12))
print("r(6) for (2,2)  =", order_r(BSParams(2, 2), 6))

# Confinement: a phenotype-q subgroup containing a t-length-kappa word
# outside the normal closure of b is forced to contain b^R.
print("\nR(q=1, kappa=1) for (2,3) =", confinement_bound_R(p23, 1, 1))
print("R(q=5, kappa=2) for (2,3) =", confinement_bound_R(p23, 5, 2))

# Approximation moduli N_j: phenotype-q subgroups converging to a
# subgroup below the normal closure of b use these exponents.
print("\nN_j for (2,3), q=1, kappa=1:", [approximation_level_N(p23, 1, 1, j) for j in (1, 2, 3)])
