"""Subgroup-level queries: phenotype, stabilizers, normal closures, the
maximal compact piece, kernel verdicts, quotient actions, conjugation,
and the triangle construction."""

import random

import pytest

from bsx.arith import INF, BSParams, order_r, phenotype, special_divisor_s
from bsx.errors import NotCoprime, Undefined
from bsx.mn_graph import MnGraph, forest_saturate, is_saturated
from bsx.preaction import (
    COMPLETE,
    TRUNCATED,
    PointedAction,
    PreAction,
    bass_serre,
    bass_serre_with_maps,
    evaluate,
    pointed_eq_R,
    realize,
)
from bsx.subgroups import (
    IN_KERNEL,
    NO,
    NOT_IN_KERNEL,
    UNKNOWN,
    YES,
    KernelVerdict,
    classify_kernel,
    conjugate,
    contains_normal_closure,
    mcq_member,
    quotient_action,
    stabilizer_contains,
    subgroup_phenotype,
    triangle_preaction,
)
from bsx.words import Word, parse_word
from tests.conftest import random_seed_graph, wrap_quotient


# ------------------------------------------------------------ quotient action

def test_quotient_action_oracle_checks():
    params = BSParams(2, 3)
    pointed = quotient_action(params, 5, window=3)
    pa = pointed.pre
    # every closed b-orbit has size exactly q
    from bsx.preaction import beta_orbits

    assert all(len(o) == 5 for o in beta_orbits(pa))
    # the defining relation fixes every point where it is defined
    relation = parse_word("t b^2 T b^-3")
    for x in range(pa.n_points):
        out = evaluate(pa, x, relation)
        assert out in (None, x)
    # t-edges connect consecutive levels only
    for x, y in pa.tau.items():
        assert y // 5 == x // 5 + 1
    # conjugation multiplier: t b^2 t^-1 b^-3 is the identity, and the
    # basepoint level acts by +1 then multiplier 4 upstairs
    assert stabilizer_contains(pointed, parse_word("b^5")) == YES
    assert stabilizer_contains(pointed, parse_word("b^4")) == NO


def test_quotient_action_q1_is_level_line():
    pointed = quotient_action(BSParams(2, 3), 1, window=4)
    pa = pointed.pre
    assert pa.n_points == 9
    assert all(pa.beta[x] == x for x in range(9))
    assert len(pa.tau) == 8


def test_quotient_action_not_coprime():
    with pytest.raises(NotCoprime):
        quotient_action(BSParams(2, 4), 2, window=2)


def test_quotient_actions_distinguished_at_radius_5():
    params = BSParams(2, 3)
    a = quotient_action(params, 5, window=6)
    b = quotient_action(params, 7, window=6)
    assert pointed_eq_R(a, b, 0)
    assert not pointed_eq_R(a, b, 5)


# ---------------------------------------------------------------- phenotype

def test_subgroup_phenotype_of_quotient():
    assert subgroup_phenotype(quotient_action(BSParams(2, 3), 5, 3)) == 5


def test_subgroup_phenotype_on_fig(fig_graph):
    pa = realize(fig_graph)
    maps = bass_serre_with_maps(pa)
    six = next(v for v, lab in maps.graph.vertices.items() if lab == 6)
    pointed = PointedAction(pa, maps.orbit_points[six][0])
    assert subgroup_phenotype(pointed) == 1


# --------------------------------------------------------------- stabilizers

def test_stabilizer_contains_basics():
    pointed = quotient_action(BSParams(2, 3), 5, 3)
    assert stabilizer_contains(pointed, Word()) == YES
    assert stabilizer_contains(pointed, parse_word("b^5")) == YES
    # walking past the window is honest indecision
    assert stabilizer_contains(pointed, parse_word("t^7")) == UNKNOWN


def test_conjugate_moves_basepoint():
    pointed = quotient_action(BSParams(2, 3), 5, 3)
    moved = conjugate(pointed, parse_word("b"))
    assert moved.basepoint != pointed.basepoint
    assert conjugate(pointed, Word()) == pointed
    with pytest.raises(Undefined):
        conjugate(pointed, parse_word("t^7"))


def test_conjugation_preserves_phenotype():
    rng = random.Random(11)
    params = BSParams(2, 3)
    from tests.test_words import random_word

    checked = 0
    while checked < 50:
        pa = wrap_quotient(params, rng.choice([1, 5, 7, 25]))
        base = rng.randrange(pa.n_points)
        pointed = PointedAction(pa, base)
        w = random_word(rng, max_t=4)
        target = evaluate(pa, base, w)
        if target is None:
            continue
        assert subgroup_phenotype(conjugate(pointed, w)) == subgroup_phenotype(pointed)
        checked += 1


# ----------------------------------------------------------- normal closures

def test_contains_normal_closure_quotient():
    # orbits are always closed (total permutation), so truncated data
    # still decides divisibility
    pointed = quotient_action(BSParams(2, 3), 5, 3)
    assert contains_normal_closure(pointed.pre, 5) == YES
    assert contains_normal_closure(pointed.pre, 3) == NO
    assert contains_normal_closure(pointed.pre, 10) == YES
    complete = wrap_quotient(BSParams(2, 3), 5, 2)
    assert contains_normal_closure(complete, 5) == YES
    assert contains_normal_closure(complete, 3) == NO
    assert contains_normal_closure(complete, 10) == YES


def test_normal_closure_matches_order_r():
    # containing the closure of b^k is the same as containing that of
    # b^(r(k)) on complete data
    params = BSParams(2, 3)
    for q, levels in [(1, 2), (5, 2), (7, 6)]:
        pa = wrap_quotient(params, q, levels)
        for k in range(1, 61):
            assert contains_normal_closure(pa, k) == contains_normal_closure(
                pa, order_r(params, k)
            )


# ---------------------------------------------------------------------- MCq

def test_special_divisor_equals_q_for_coprime():
    params = BSParams(2, 3)
    for q in range(1, 51):
        if phenotype(params, q) != q:
            continue
        assert special_divisor_s(params, q) == q


def test_mcq_of_quotient_actions():
    params = BSParams(2, 3)
    for q in range(1, 51):
        if phenotype(params, q) != q:
            continue
        pointed = quotient_action(params, q, window=2)
        assert mcq_member(pointed) == YES
        complete = wrap_quotient(params, q)
        assert mcq_member(PointedAction(complete, 0)) == YES


def test_mcq_flips_on_oversized_orbit():
    # adjoin one b-orbit of size 2q: the verdict flips to no and the
    # quotient graph certifies unboundedness
    params = BSParams(2, 3)
    q = 5
    pointed = quotient_action(params, q, window=2)
    pa = pointed.pre
    extra = 2 * q
    beta = list(pa.beta) + [pa.n_points + (i + 1) % extra for i in range(extra)]
    bigger = PreAction(params, pa.n_points + extra, tuple(beta), dict(pa.tau), TRUNCATED)
    assert mcq_member(PointedAction(bigger, pointed.basepoint)) == NO
    verdict = classify_kernel(bigger)
    assert verdict.verdict == IN_KERNEL
    assert verdict.certificate[0] == "UnboundedLabelWitness"
    assert verdict.certificate[2] == 2


# ------------------------------------------------------------ kernel verdicts

def test_classify_complete_action_not_in_kernel():
    pa = wrap_quotient(BSParams(2, 3), 5, 2)
    verdict = classify_kernel(pa)
    assert verdict.verdict == NOT_IN_KERNEL
    assert verdict.reason == "FiniteCompleteAction"


def test_classify_saturated_loop_graph():
    g = MnGraph(BSParams(2, 3), {"v": 1}, {"e": ("v", "v")})
    verdict = classify_kernel(g)
    assert verdict.verdict == NOT_IN_KERNEL
    assert verdict.reason == "FiniteCompleteAction"


def test_classify_infinite_label_bouquet():
    g = MnGraph(BSParams(2, 2), {"v": INF}, {"e1": ("v", "v"), "e2": ("v", "v")})
    assert is_saturated(g)
    verdict = classify_kernel(g)
    assert verdict.verdict == NOT_IN_KERNEL
    assert verdict.reason == "FiniteSaturatedInfiniteLabels"


def test_classify_unbounded_truncation():
    g = MnGraph(BSParams(2, 3), {"v": 10}, {})
    verdict = classify_kernel(g)
    assert verdict.verdict == IN_KERNEL
    assert verdict.certificate == ("UnboundedLabelWitness", "v", 2)


def test_classify_all_ones_truncation_unknown():
    g = MnGraph(BSParams(2, 3), {"u": 1, "v": 1}, {})
    assert classify_kernel(g).verdict == UNKNOWN


def test_certified_verdicts_stable_under_extension():
    rng = random.Random(41)
    params_pool = [BSParams(2, 3), BSParams(2, 4), BSParams(6, 4)]
    done = 0
    while done < 50:
        params = rng.choice(params_pool)
        g = random_seed_graph(rng, params)
        before = classify_kernel(g)
        extended, _ = forest_saturate(g, 2)
        after = classify_kernel(extended)
        if before.verdict == IN_KERNEL:
            assert after.verdict == IN_KERNEL
        if before.verdict == NOT_IN_KERNEL:
            assert after.verdict == NOT_IN_KERNEL
        done += 1


def test_kernel_verdict_json():
    verdict = KernelVerdict(IN_KERNEL, certificate=("UnboundedLabelWitness", "v", 2))
    assert verdict.as_json() == {
        "verdict": "in_kernel",
        "certificate": {"kind": "UnboundedLabelWitness", "vertex": "v", "prime": 2},
    }


# --------------------------------------------------------- k-loops invariant

def test_k_loops_lemma_witness():
    # gcd(m, n) = 2: an action whose basepoint is fixed by t and b t b^-1
    # and has finite phenotype projects to a single vertex with loops
    params = BSParams(2, 4)
    pa = PreAction(params, 2, (1, 0), {0: 0, 1: 1}, COMPLETE)
    pointed = PointedAction(pa, 0)
    assert stabilizer_contains(pointed, parse_word("t")) == YES
    assert stabilizer_contains(pointed, parse_word("b t B")) == YES
    assert subgroup_phenotype(pointed) == 1
    g = bass_serre(pa)
    assert len(g.vertices) == 1
    assert len(g.pos_edges) == 2
    assert all(s == t for s, t in g.pos_edges.values())


# ------------------------------------------------------ triangle construction

@pytest.mark.parametrize("p", [5, 7, 11])
def test_triangle_construction(p):
    params = BSParams(2, 3)
    pointed = triangle_preaction(params, p)
    g = bass_serre(pointed.pre)
    labels = sorted(g.vertices.values())
    assert labels == sorted([3 * p, p, 2 * p])
    assert len(g.pos_edges) == 3
    from bsx.mn_graph import graph_phenotype, is_connected, validate

    assert validate(g).ok
    assert is_connected(g)
    assert list(graph_phenotype(g).values()) == [p]
    assert subgroup_phenotype(pointed) == p
    assert stabilizer_contains(pointed, parse_word("t t b T b")) == YES


def test_triangle_survives_saturation_and_realization():
    params = BSParams(2, 3)
    p = 5
    pointed = triangle_preaction(params, p)
    from bsx.preaction import realize_extending, validate_preaction
    from bsx.mn_graph import forest_saturate

    maps = bass_serre_with_maps(pointed.pre)
    extended, _ = forest_saturate(maps.graph, 1)
    vmap = {v: v for v in maps.graph.vertices}
    emap = {e: e for e in maps.graph.pos_edges}
    bigger = realize_extending(pointed.pre, extended, vmap, emap)
    assert validate_preaction(bigger).ok
    again = PointedAction(bigger, pointed.basepoint)
    assert stabilizer_contains(again, parse_word("t t b T b")) == YES
    assert subgroup_phenotype(again) == p
