"""Exact arithmetic on orbit cardinalities.

Labels of vertices and orbits live in the extended domain: positive
integers together with a single infinite value ``INF``.  All formulas here
(valuations, phenotype, the special divisor s, the order r(k), the
confinement bound R and the approximation levels N_j) work prime by prime
and only ever need primes up to max(|m|, |n|, k), so plain trial division
is enough; no general factorization is attempted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .errors import NotAPhenotype, ParamTooSmall


class Infinity:
    """The infinite cardinality; a singleton, never a sentinel integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __reduce__(self):
        return (Infinity, ())


INF = Infinity()

# Positive integer or INF.
ExtCard = Union[int, Infinity]


def is_inf(x: ExtCard) -> bool:
    return isinstance(x, Infinity)


def check_card(x: ExtCard) -> ExtCard:
    if is_inf(x):
        return x
    if not isinstance(x, int) or isinstance(x, bool) or x < 1:
        raise ValueError(f"not a valid cardinality: {x!r}")
    return x


def ext_gcd(x: ExtCard, k: int) -> int:
    """gcd with the convention gcd(inf, k) = |k|."""
    if k == 0:
        raise ValueError("gcd with 0 is not used here")
    if is_inf(x):
        return abs(k)
    return math.gcd(x, k)


def ext_div(x: ExtCard, d: int) -> ExtCard:
    """x / d for a divisor d of x; inf / d = inf."""
    if is_inf(x):
        return INF
    if x % d != 0:
        raise ValueError(f"{d} does not divide {x}")
    return x // d


def ext_mul(x: ExtCard, k: int) -> ExtCard:
    """k * x with k * inf = inf; the result stays a positive cardinality."""
    if is_inf(x):
        return INF
    return x * abs(k)


@dataclass(frozen=True)
class BSParams:
    """The two defining integers; both non-zero, signs allowed.

    Operations that need |m| >= 2 and |n| >= 2 check it themselves; the
    container only rules out zero.
    """

    m: int
    n: int

    def __post_init__(self):
        if self.m == 0 or self.n == 0:
            raise ValueError("parameters must be non-zero")

    def swapped(self) -> "BSParams":
        return BSParams(self.n, self.m)

    def require_large(self):
        if abs(self.m) < 2 or abs(self.n) < 2:
            raise ParamTooSmall(f"need |m| >= 2 and |n| >= 2, got ({self.m}, {self.n})")


def valuation(k: int, p: int) -> int:
    """Largest e with p**e dividing k (k != 0)."""
    if k == 0:
        raise ValueError("valuation of 0 is undefined")
    k = abs(k)
    e = 0
    while k % p == 0:
        k //= p
        e += 1
    return e


@lru_cache(maxsize=None)
def factorize(k: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of |k| by trial division, as ((p, e), ...)."""
    k = abs(k)
    if k == 0:
        raise ValueError("cannot factor 0")
    out = []
    d = 2
    while d * d <= k:
        if k % d == 0:
            e = 0
            while k % d == 0:
                k //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if k > 1:
        out.append((k, 1))
    return tuple(out)


def prime_support(*ks: int) -> list[int]:
    """Sorted primes dividing at least one of the given integers."""
    ps = set()
    for k in ks:
        for p, _ in factorize(k):
            ps.add(p)
    return sorted(ps)


def phenotype(params: BSParams, k: ExtCard) -> ExtCard:
    """The arithmetic invariant constant on connected components.

    Keeps exactly the primes p of k where m and n have equal p-valuation
    exceeded by that of k; infinity maps to infinity.
    """
    check_card(k)
    if is_inf(k):
        return INF
    out = 1
    for p, e in factorize(k):
        vm = valuation(params.m, p)
        vn = valuation(params.n, p)
        if vm == vn and e > vn:
            out *= p**e
    return out


def is_phenotype(params: BSParams, q: int) -> bool:
    return isinstance(q, int) and q >= 1 and phenotype(params, q) == q


def _require_phenotype(params: BSParams, q: int):
    if not is_phenotype(params, q):
        raise NotAPhenotype(f"{q} is not an ({params.m},{params.n})-phenotype")


def special_divisor_s(params: BSParams, q: int) -> int:
    """Largest label of phenotype q that never certifies unbounded growth.

    All orbit sizes of the maximal compact invariant piece in phenotype q
    divide this number.
    """
    _require_phenotype(params, q)
    s = q
    for p in prime_support(params.m, params.n):
        vm = valuation(params.m, p)
        vn = valuation(params.n, p)
        if vm == vn:
            if vm > 0 and q % p != 0:
                s *= p**vm
        else:
            s *= p ** min(vm, vn)
    return s


def order_r(params: BSParams, k: int) -> int:
    """Order of b in the quotient by the normal closure of b**k.

    Equals the largest divisor r' of k with gcd(r', m) = gcd(r', n).
    """
    if k < 1:
        raise ValueError("k must be positive")
    r = 1
    for p, e in factorize(k):
        vm = valuation(params.m, p)
        vn = valuation(params.n, p)
        if vm == vn:
            r *= p**e
        else:
            r *= p ** min(e, vm, vn)
    return r


def enumerate_phenotype_preimage(params: BSParams, q: int, bound: int) -> list[int]:
    """All k <= bound with phenotype q, ascending.

    The preimage is finite exactly when |m| = |n|, in which case a large
    enough bound returns all of it.
    """
    _require_phenotype(params, q)
    return [k for k in range(1, bound + 1) if phenotype(params, k) == q]


def max_valuation(params: BSParams) -> int:
    """max over primes of the valuations of m and n."""
    vals = [e for _, e in factorize(params.m)] + [e for _, e in factorize(params.n)]
    return max(vals, default=0)


def confinement_bound_R(params: BSParams, q: int, kappa: int) -> int:
    """Power of b forced into any phenotype-q subgroup that contains a
    word of t-length kappa leaving the normal closure of b."""
    _require_phenotype(params, q)
    if kappa < 1:
        raise ValueError("kappa must be >= 1")
    radical = 1
    for p in prime_support(params.m, params.n):
        radical *= p
    return q * radical ** (kappa * max_valuation(params))


def approximation_level_N(params: BSParams, q: int, kappa: int, j: int) -> int:
    """j-th modulus in the approximation of a subgroup below the normal
    closure of b by subgroups of phenotype q."""
    params.require_large()
    _require_phenotype(params, q)
    if kappa < 1 or j < 1:
        raise ValueError("kappa and j must be >= 1")
    M = max_valuation(params)
    out = q
    for p in prime_support(params.m, params.n):
        vm = valuation(params.m, p)
        vn = valuation(params.n, p)
        if vm == vn:
            if q % p != 0:
                out *= p**vm
        else:
            out *= p ** (j * kappa * M)
    assert phenotype(params, out) == q
    return out
