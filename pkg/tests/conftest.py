"""Shared fixtures: the five-vertex (2,3) example graph and helpers for
generating random valid graphs."""

import random

import pytest

from bsx.arith import BSParams, ext_gcd
from bsx.mn_graph import MnGraph, admissible_neighbor_labels, forest_saturate


def make_fig_graph():
    """The transitive (2,3) example: labels 8, 4, 6, 4, 9; the 6 sends two
    edges to the first 4 and one to the second, the 9 sends two edges to
    the 6, the first 4 feeds the 8."""
    params = BSParams(2, 3)
    vertices = {"e": 8, "a": 4, "b": 6, "c": 4, "d": 9}
    edges = {
        "b_a1": ("b", "a"),
        "b_a2": ("b", "a"),
        "b_c": ("b", "c"),
        "d_b1": ("d", "b"),
        "d_b2": ("d", "b"),
        "a_e": ("a", "e"),
    }
    return MnGraph(params, vertices, edges)


@pytest.fixture
def fig_graph():
    return make_fig_graph()


def random_seed_graph(rng: random.Random, params: BSParams, max_label=24, grow_steps=3) -> MnGraph:
    """A small random valid connected graph grown by admissible edges."""
    label = rng.randint(1, max_label)
    g = MnGraph(params, {"v0": label}, {})
    counter = 1
    for _ in range(grow_steps):
        v = rng.choice(sorted(g.vertices))
        direction = rng.choice(["outgoing", "incoming"])
        if direction == "outgoing":
            has_slot = g.degout(v) < ext_gcd(g.vertices[v], params.n)
        else:
            has_slot = g.degin(v) < ext_gcd(g.vertices[v], params.m)
        if not has_slot:
            continue
        options = admissible_neighbor_labels(params, g.vertices[v], direction)
        new_label = rng.choice(options)
        new_id = f"v{counter}"
        counter += 1
        g.vertices[new_id] = new_label
        eid = f"e{counter}"
        if direction == "outgoing":
            g.pos_edges[eid] = (v, new_id)
        else:
            g.pos_edges[eid] = (new_id, v)
    return g


def random_complete_graph(rng: random.Random, params: BSParams, rounds=2):
    """Random graph forest-saturated for a few rounds; may keep a frontier."""
    g = random_seed_graph(rng, params)
    sat, frontier = forest_saturate(g, rounds)
    return sat, frontier


def wrap_quotient(params: BSParams, q: int, levels: int | None = None):
    """A finite complete action on q * levels points: residues mod q on
    cyclically wrapped levels.  Needs gcd(q, mn) = 1 and the conjugation
    multiplier's order to divide ``levels`` (the default is that order)."""
    from bsx.preaction import COMPLETE, PreAction

    u = (params.n * pow(params.m, -1, q)) % q if q > 1 else 0
    if levels is None:
        levels, acc = 1, u
        while q > 1 and acc != 1:
            acc = acc * u % q
            levels += 1
    if q > 1:
        assert pow(u, levels, q) == 1, "levels must absorb the multiplier order"

    def pid(x, h):
        return (h % levels) * q + (x % q)

    beta, tau = [0] * (q * levels), {}
    for h in range(levels):
        shift = pow(u, h, q) if q > 1 else 0
        for x in range(q):
            beta[pid(x, h)] = pid(x + shift, h)
            tau[pid(x, h)] = pid(x, h + 1)
    return PreAction(params, q * levels, tuple(beta), tau, COMPLETE)
