"""Subgroup-space classification through pointed actions.

A subgroup is represented extensionally: a (possibly truncated) transitive
pre-action pointed at the coset of the subgroup.  Membership questions
become walks in the Schreier graph, phenotype questions become orbit-size
arithmetic, and kernel membership is certified or refuted from the
quotient graph.  Every verdict on truncated data is three-valued; a
certified answer carries its witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .arith import BSParams, ext_gcd, is_inf, phenotype, special_divisor_s
from .errors import InvalidInput, NotCoprime, TruncationTooSmall, Undefined
from .mn_graph import MnGraph, detect_unbounded, is_saturated, require_valid
from .preaction import (
    COMPLETE,
    TRUNCATED,
    PointedAction,
    PreAction,
    bass_serre,
    beta_orbits,
    evaluate,
    require_valid_preaction,
)
from .words import Word

YES = "yes"
NO = "no"
UNKNOWN = "unknown"
SO_FAR = "so_far"


# ------------------------------------------------------------- basic queries

def subgroup_phenotype(pointed: PointedAction):
    """Phenotype of the subgroup: that of its basepoint b-orbit size.

    The orbit must close inside the data; with a total permutation this is
    automatic, the error is kept for defensive symmetry with truncations.
    """
    pa = pointed.pre
    size = _orbit_size(pa, pointed.basepoint)
    if size is None:
        raise TruncationTooSmall("basepoint b-orbit does not close in the data")
    return phenotype(pa.params, size)


def _orbit_size(pa: PreAction, x: int) -> Optional[int]:
    size = 1
    y = pa.beta[x]
    while y != x:
        size += 1
        y = pa.beta[y]
        if size > pa.n_points:
            return None
    return size


def stabilizer_contains(pointed: PointedAction, w: Word) -> str:
    """Does the subgroup contain the word?  Truncation boundaries give
    ``unknown``."""
    target = evaluate(pointed.pre, pointed.basepoint, w)
    if target is None:
        return UNKNOWN
    return YES if target == pointed.basepoint else NO


def conjugate(pointed: PointedAction, w: Word) -> PointedAction:
    """Move the basepoint along the word; this is conjugation on the
    subgroup side."""
    target = evaluate(pointed.pre, pointed.basepoint, w)
    if target is None:
        raise Undefined("conjugating word leaves the truncation")
    return PointedAction(pointed.pre, target)


# --------------------------------------------------------- normal closures

def contains_normal_closure(pa: PreAction, k: int) -> str:
    """Whether the subgroup contains every conjugate of b**k.

    Equivalent to every b-orbit size dividing k.  The permutation is total,
    so every orbit in the data is closed and the divisibility question is
    decided outright; ``so_far`` is reserved for data whose b-orbits can be
    cut open, which this representation does not produce.
    """
    if k < 1:
        raise InvalidInput("k must be positive")
    require_valid_preaction(pa)
    for orbit in beta_orbits(pa):
        if k % len(orbit) != 0:
            return NO
    return YES


def mcq_member(pointed: PointedAction) -> str:
    """Membership in the maximal compact invariant piece of the subgroup's
    phenotype: all orbit sizes must divide the special divisor s.

    ``unknown`` would arise only from data that cannot settle the orbit
    sizes; with total permutations the answer is always decided."""
    q = subgroup_phenotype(pointed)
    if is_inf(q):
        return NO
    s = special_divisor_s(pointed.pre.params, q)
    answer = contains_normal_closure(pointed.pre, s)
    if answer == NO:
        return NO
    return YES if answer in (YES, SO_FAR) else UNKNOWN


# ------------------------------------------------------------ kernel verdict

@dataclass(frozen=True)
class KernelVerdict:
    verdict: str  # in_kernel | not_in_kernel | unknown
    certificate: Optional[tuple] = None  # ("UnboundedLabelWitness", vertex, prime)
    reason: Optional[str] = None  # FiniteCompleteAction | FiniteSaturatedInfiniteLabels

    def as_json(self):
        out = {"verdict": self.verdict}
        if self.certificate is not None:
            kind, vertex, prime = self.certificate
            out["certificate"] = {"kind": kind, "vertex": vertex, "prime": prime}
        if self.reason is not None:
            out["reason"] = self.reason
        return out


IN_KERNEL = "in_kernel"
NOT_IN_KERNEL = "not_in_kernel"


def classify_kernel(data: Union[PreAction, MnGraph]) -> KernelVerdict:
    """Certified perfect-kernel membership from finite data.

    A finite complete action has a finite quotient graph, hence lies
    outside the kernel; so does a finite saturated all-infinite quotient
    graph (only possible when |m| = |n|).  Truncated data certifies
    membership when some label forces every saturated extension to have
    unbounded labels; otherwise the honest answer is unknown.
    """
    if isinstance(data, PreAction):
        require_valid_preaction(data)
        if data.kind == COMPLETE:
            return KernelVerdict(NOT_IN_KERNEL, reason="FiniteCompleteAction")
        graph = bass_serre(data)
    elif isinstance(data, MnGraph):
        graph = data
    else:
        raise InvalidInput("expected a pre-action or a graph")
    require_valid(graph)
    if is_saturated(graph):
        labels = list(graph.vertices.values())
        if labels and all(not is_inf(l) for l in labels):
            return KernelVerdict(NOT_IN_KERNEL, reason="FiniteCompleteAction")
        if labels and all(is_inf(l) for l in labels):
            if abs(graph.params.m) == abs(graph.params.n):
                return KernelVerdict(NOT_IN_KERNEL, reason="FiniteSaturatedInfiniteLabels")
            return KernelVerdict(UNKNOWN)
        return KernelVerdict(UNKNOWN)
    witness = detect_unbounded(graph)
    if witness is not None:
        vertex, prime = witness
        return KernelVerdict(IN_KERNEL, certificate=("UnboundedLabelWitness", vertex, prime))
    return KernelVerdict(UNKNOWN)


# ------------------------------------------------------------ quotient action

def quotient_action(params: BSParams, q: int, window: int) -> PointedAction:
    """The action on the quotient by the normal closure of b**q, truncated
    to finitely many t-levels.

    For q coprime to m and n the quotient splits as residues mod q
    extended by a level shift; conjugation by the level step multiplies
    residues by n/m mod q.  Points live on levels -window..window, the
    level map t is defined below the top level, and every level is one
    b-orbit of size exactly q.
    """
    if q < 1 or window < 1:
        raise InvalidInput("q and window must be positive")
    if ext_gcd(q, params.m) != 1 or ext_gcd(q, params.n) != 1:
        raise NotCoprime(f"q = {q} shares a factor with m or n")
    levels = 2 * window + 1
    n_points = q * levels

    def pid(x: int, h: int) -> int:
        return (h + window) * q + (x % q)

    u = (params.n * pow(params.m, -1, q)) % q if q > 1 else 0
    beta = [0] * n_points
    tau = {}
    for h in range(-window, window + 1):
        shift = pow(u, h, q) if q > 1 else 0
        for x in range(q):
            beta[pid(x, h)] = pid(x + shift, h)
            if h < window:
                tau[pid(x, h)] = pid(x, h + 1)
    pa = PreAction(params, n_points, tuple(beta), tau, TRUNCATED)
    return PointedAction(require_valid_preaction(pa), pid(0, 0))


# ------------------------------------------------------- triangle pre-action

def triangle_preaction(params: BSParams, p: int) -> PointedAction:
    """Three b-cycles of sizes p|n|, p, p|m| wired into a triangle.

    For p prime to mn this is a transitive pre-action of phenotype p whose
    basepoint is stabilized by t t b t^-1 b; the third wire turns by one
    step so the triangle closes off-axis.
    """
    params.require_large()
    if ext_gcd(p, params.m) != 1 or ext_gcd(p, params.n) != 1:
        raise NotCoprime(f"p = {p} shares a factor with m or n")
    an, am = abs(params.n), abs(params.m)
    sizes = [p * an, p, p * am]
    offsets = [0, p * an, p * an + p]
    n_points = p * (an + 1 + am)
    beta = [0] * n_points
    for block, size in enumerate(sizes):
        off = offsets[block]
        for i in range(size):
            beta[off + i] = off + (i + 1) % size
    y1, y2, y3 = offsets[0], offsets[1], offsets[2]

    def o1(i):
        return y1 + i % sizes[0]

    def o2(i):
        return y2 + i % sizes[1]

    def o3(i):
        return y3 + i % sizes[2]

    tau = {}
    for j in range(p):
        tau[o1(j * params.n)] = o2(j * params.m)
        tau[o2(j * params.n)] = o3(j * params.m)
        tau[o1(-1 + j * params.n)] = o3(1 + j * params.m)
    pa = PreAction(params, n_points, tuple(beta), tau, TRUNCATED)
    return PointedAction(require_valid_preaction(pa), y1)
