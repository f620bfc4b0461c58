"""Arithmetic layer: valuations, phenotype, s, r, R, N_j.

Derived expected values are frozen from the brute-force oracles defined at
the top of this file; the oracles never call the code paths they check.
"""

import math

import pytest

from bsx.arith import (
    INF,
    BSParams,
    approximation_level_N,
    confinement_bound_R,
    enumerate_phenotype_preimage,
    factorize,
    is_inf,
    max_valuation,
    order_r,
    phenotype,
    special_divisor_s,
    valuation,
)
from bsx.errors import NotAPhenotype, ParamTooSmall


# ---------------------------------------------------------------- oracles

def oracle_valuation(k, p):
    e = 0
    while k % p**(e + 1) == 0:
        e += 1
    return e


def oracle_phenotype_23(k):
    # closed form for (2,3): strip the full 2- and 3-parts
    while k % 2 == 0:
        k //= 2
    while k % 3 == 0:
        k //= 3
    return k


def oracle_order_r(m, n, k):
    # brute force over all divisors of k
    best = 1
    for r in range(1, k + 1):
        if k % r == 0 and math.gcd(r, m) == math.gcd(r, n):
            best = max(best, r)
    return best


def oracle_special_s(m, n, q):
    # largest d <= q*(mn)^2 of phenotype q such that no prime p has
    # unequal valuations in m, n and |d|_p > min(|m|_p, |n|_p)
    params = BSParams(m, n)
    best = None
    for d in range(1, q * (m * n) ** 2 + 1):
        if phenotype(params, d) != q:
            continue
        ok = True
        for p in range(2, max(abs(m), abs(n)) + 1):
            if any(p % r == 0 for r in range(2, p)):
                continue
            vm, vn = oracle_valuation(abs(m), p), oracle_valuation(abs(n), p)
            if vm != vn and oracle_valuation(d, p) > min(vm, vn):
                ok = False
                break
        if ok:
            best = d
    return best


# ------------------------------------------------------------- valuation

@pytest.mark.parametrize("k,p,e", [(12, 2, 2), (12, 3, 1), (7, 2, 0), (1, 5, 0)])
def test_valuation_fixtures(k, p, e):
    assert valuation(k, p) == e


def test_valuation_matches_oracle():
    for k in range(1, 400):
        for p in (2, 3, 5, 7):
            assert valuation(k, p) == oracle_valuation(k, p)


# ------------------------------------------------------------- phenotype

def test_phenotype_noncoprime_fixtures():
    params = BSParams(180, 12)
    assert phenotype(params, 2 * 3 * 7) == 7
    assert phenotype(params, 2**5 * 3 * 7) == 2**5 * 7


def test_phenotype_infinity():
    assert is_inf(phenotype(BSParams(180, 12), INF))
    assert is_inf(phenotype(BSParams(2, 3), INF))


def test_phenotype_23_closed_form():
    params = BSParams(2, 3)
    assert phenotype(params, 12) == 1
    for k in range(1, 10_001):
        assert phenotype(params, k) == oracle_phenotype_23(k)


def test_phenotype_coprime_is_identity():
    params = BSParams(2, 3)
    for q in (1, 5, 7, 25, 35, 121):
        assert phenotype(params, q) == q


def test_phenotype_idempotent_and_gcd_equal():
    for am in range(2, 13):
        for an in range(2, 13):
            params = BSParams(am, an)
            for k in range(1, 10_001):
                q = phenotype(params, k)
                assert phenotype(params, q) == q
                assert math.gcd(q, am) == math.gcd(q, an)


def test_phenotype_sign_invariant():
    for k in range(1, 500):
        assert phenotype(BSParams(-2, 3), k) == phenotype(BSParams(2, 3), k)
        assert phenotype(BSParams(2, -3), k) == phenotype(BSParams(2, 3), k)


def test_phenotype_lattice_compatibility():
    params = BSParams(4, 6)
    by_phen = {}
    for k in range(1, 501):
        by_phen.setdefault(phenotype(params, k), []).append(k)
    for q, ks in by_phen.items():
        for k in ks:
            for l in ks:
                g = math.gcd(k, l)
                assert phenotype(params, g) == q
                assert phenotype(params, k * l // g) == q


# ------------------------------------------------------- special divisor

@pytest.mark.parametrize("m,n,q,s", [(2, 3, 5, 5), (4, 6, 5, 10), (2, 2, 3, 6)])
def test_special_divisor_fixtures(m, n, q, s):
    assert special_divisor_s(BSParams(m, n), q) == s
    assert oracle_special_s(m, n, q) == s


def test_special_divisor_matches_oracle():
    for m, n in [(2, 3), (2, 4), (4, 6), (6, 6), (-2, 3)]:
        params = BSParams(m, n)
        for q in range(1, 30):
            if phenotype(params, q) != q:
                continue
            assert special_divisor_s(params, q) == oracle_special_s(m, n, q)


def test_special_divisor_rejects_non_phenotype():
    with pytest.raises(NotAPhenotype):
        special_divisor_s(BSParams(2, 3), 6)


def test_divisibility_ceiling():
    # d of phenotype q divides s(q) iff no prime has unequal valuations
    # in m, n exceeded by d
    for m, n in [(2, 3), (2, 4), (4, 6)]:
        params = BSParams(m, n)
        for d in range(1, 10_001):
            q = phenotype(params, d)
            s = special_divisor_s(params, q)
            bad = False
            for p in dict(factorize(m * n)):
                vm, vn = valuation(m, p), valuation(n, p)
                if vm != vn and valuation(d, p) > min(vm, vn):
                    bad = True
            assert (s % d == 0) == (not bad)


# ---------------------------------------------------------------- order r

@pytest.mark.parametrize("m,n,k,r", [(2, 4, 8, 2), (2, 3, 12, 1), (2, 2, 6, 6)])
def test_order_r_fixtures(m, n, k, r):
    assert order_r(BSParams(m, n), k) == r
    assert oracle_order_r(m, n, k) == r


def test_order_r_matches_divisor_oracle():
    for m in range(1, 61):
        for n in range(1, 61):
            params = BSParams(m, n)
            for k in range(1, 61):
                assert order_r(params, k) == oracle_order_r(m, n, k)


def test_order_r_divides_and_balances():
    params = BSParams(6, 4)
    for k in range(1, 200):
        r = order_r(params, k)
        assert k % r == 0
        assert math.gcd(r, 6) == math.gcd(r, 4)


# ------------------------------------------------------ preimage listing

def test_preimage_fixtures():
    assert enumerate_phenotype_preimage(BSParams(2, 3), 5, 50) == [5, 10, 15, 20, 30, 40, 45]
    assert enumerate_phenotype_preimage(BSParams(2, 2), 3, 100) == [3, 6]


def test_preimage_contains_q():
    for q in (1, 5, 7, 35):
        assert q in enumerate_phenotype_preimage(BSParams(2, 3), q, q)


def test_preimage_rejects_non_phenotype():
    with pytest.raises(NotAPhenotype):
        enumerate_phenotype_preimage(BSParams(2, 2), 2, 10)


def test_preimage_finite_iff_abs_equal():
    # |m| = |n|: the count stabilizes across doublings; otherwise it grows
    for m, n in [(2, 2), (6, -6)]:
        params = BSParams(m, n)
        counts = [len(enumerate_phenotype_preimage(params, 1, b)) for b in (1250, 2500, 5000, 10_000)]
        assert counts[-1] == counts[-2]
    for m, n in [(2, 3), (2, 4), (6, 4)]:
        params = BSParams(m, n)
        counts = [len(enumerate_phenotype_preimage(params, 1, b)) for b in (1250, 2500, 5000, 10_000)]
        assert counts[0] < counts[1] < counts[2] < counts[3]


# ------------------------------------------------- confinement bound R

@pytest.mark.parametrize("m,n,q,kappa,R", [(2, 3, 1, 1, 6), (2, 3, 5, 2, 180), (6, 6, 1, 3, 216)])
def test_confinement_bound_fixtures(m, n, q, kappa, R):
    assert confinement_bound_R(BSParams(m, n), q, kappa) == R


def test_confinement_bound_rejects():
    with pytest.raises(NotAPhenotype):
        confinement_bound_R(BSParams(2, 3), 4, 1)


# ---------------------------------------------- approximation levels N_j

@pytest.mark.parametrize("m,n,q,kappa,j,N", [
    (2, 3, 1, 1, 1, 6),
    (2, 3, 1, 1, 2, 36),
    (4, 2, 1, 1, 1, 4),
])
def test_approximation_level_fixtures(m, n, q, kappa, j, N):
    assert approximation_level_N(BSParams(m, n), q, kappa, j) == N


def test_approximation_level_has_phenotype_q():
    for m, n in [(2, 3), (4, 6), (6, 6), (12, 18)]:
        params = BSParams(m, n)
        for q in (1, 5, 7, 35):
            if phenotype(params, q) != q:
                continue
            for kappa in (1, 2):
                for j in (1, 2, 3):
                    N = approximation_level_N(params, q, kappa, j)
                    assert phenotype(params, N) == q


def test_approximation_level_needs_large_params():
    with pytest.raises(ParamTooSmall):
        approximation_level_N(BSParams(1, 3), 1, 1, 1)


def test_max_valuation():
    assert max_valuation(BSParams(2, 3)) == 1
    assert max_valuation(BSParams(4, 2)) == 2
    assert max_valuation(BSParams(180, 12)) == 2
