"""Finite pre-actions: a permutation b together with a partial bijection t
satisfying the equivariance law, their Schreier and quotient graphs, and
the passage in both directions between graphs and pre-actions.

Realization follows a fixed layout so results are reproducible: the points
of a vertex are consecutive integers carrying the standard cycle, and free
orbit slots are consumed smallest representative first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .arith import BSParams, ext_gcd, is_inf, phenotype
from .errors import (
    EmbeddingMismatch,
    InfiniteLabel,
    InvalidInput,
    InvalidPreAction,
    NoFreeSlot,
    NotConnected,
    PhenotypeMismatch,
)
from .mn_graph import (
    MergeResult,
    MnGraph,
    ValidationReport,
    Violation,
    is_saturated,
    merge_graphs,
    require_valid,
)
from .words import Word

COMPLETE = "complete"
TRUNCATED = "truncated"


@dataclass
class PreAction:
    params: BSParams
    n_points: int
    beta: tuple[int, ...]
    tau: dict[int, int] = field(default_factory=dict)
    kind: str = TRUNCATED

    def copy(self) -> "PreAction":
        return PreAction(self.params, self.n_points, tuple(self.beta), dict(self.tau), self.kind)

    def tau_inverse(self) -> dict[int, int]:
        return {v: k for k, v in self.tau.items()}


@dataclass(frozen=True)
class PointedAction:
    pre: PreAction
    basepoint: int

    def __post_init__(self):
        if not (0 <= self.basepoint < self.pre.n_points):
            raise InvalidInput(f"basepoint {self.basepoint} out of range")


def beta_orbits(pa: PreAction) -> list[list[int]]:
    """Cycles of the permutation, each starting at its smallest point,
    listed by that smallest point."""
    seen = [False] * pa.n_points
    orbits = []
    for start in range(pa.n_points):
        if seen[start]:
            continue
        orbit = [start]
        seen[start] = True
        x = pa.beta[start]
        while x != start:
            orbit.append(x)
            seen[x] = True
            x = pa.beta[x]
        orbits.append(orbit)
    return orbits


def validate_preaction(pa: PreAction) -> ValidationReport:
    violations = []
    beta = pa.beta
    if len(beta) != pa.n_points or sorted(beta) != list(range(pa.n_points)):
        return ValidationReport((Violation("BetaNotPermutation", "beta"),))
    if pa.kind not in (COMPLETE, TRUNCATED):
        violations.append(Violation("UnknownKind", pa.kind))
    dom = set(pa.tau)
    rng = set(pa.tau.values())
    if any(not (0 <= x < pa.n_points) for x in dom | rng):
        return ValidationReport((Violation("TauOutOfRange", "tau"),))
    if len(rng) != len(dom):
        violations.append(Violation("TauNotInjective", "tau"))
    bn = perm_power(beta, pa.params.n)
    bm = perm_power(beta, pa.params.m)
    for x in sorted(dom):
        if bn[x] not in dom:
            violations.append(Violation("TauDomainNotInvariant", str(x)))
    for y in sorted(rng):
        if bm[y] not in rng:
            violations.append(Violation("TauRangeNotInvariant", str(y)))
    for x in sorted(dom):
        if bn[x] in dom and pa.tau[bn[x]] != bm[pa.tau[x]]:
            violations.append(Violation("EquivarianceBroken", str(x)))
    if pa.kind == COMPLETE and (dom != set(range(pa.n_points)) or rng != set(range(pa.n_points))):
        violations.append(Violation("MarkedCompleteButTruncated", "kind"))
    return ValidationReport(tuple(violations))


def require_valid_preaction(pa: PreAction) -> PreAction:
    report = validate_preaction(pa)
    if not report.ok:
        raise InvalidPreAction(report)
    return pa


def perm_power(beta: tuple[int, ...], k: int) -> list[int]:
    """beta**k by jumping k positions along each cycle."""
    n = len(beta)
    out = [0] * n
    seen = [False] * n
    for start in range(n):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        x = beta[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = beta[x]
        size = len(cyc)
        shift = k % size
        for i, p in enumerate(cyc):
            out[p] = cyc[(i + shift) % size]
    return out


# --------------------------------------------------------------- projection

@dataclass(frozen=True)
class BassSerreMaps:
    graph: MnGraph
    vertex_of_point: tuple[str, ...]
    edge_of_point: dict[int, str]  # defined on dom(tau); constant on each t-class
    orbit_points: dict[str, tuple[int, ...]]


def bass_serre_with_maps(pa: PreAction) -> BassSerreMaps:
    """Shrink each b-orbit to a labeled vertex; each t-class inside the
    domain becomes one positive edge."""
    require_valid_preaction(pa)
    params = pa.params
    orbits = beta_orbits(pa)
    vertex_of_point = [""] * pa.n_points
    vertices = {}
    orbit_points = {}
    for i, orbit in enumerate(orbits):
        vid = f"v{i}"
        vertices[vid] = len(orbit)
        orbit_points[vid] = tuple(orbit)
        for p in orbit:
            vertex_of_point[p] = vid
    edges = {}
    edge_of_point: dict[int, str] = {}
    classes = []
    for orbit in orbits:
        size = len(orbit)
        g = ext_gcd(size, params.n)
        for r in range(g):
            class_points = [orbit[(r + k * params.n) % size] for k in range(size // g)]
            if class_points[0] in pa.tau:
                classes.append((min(class_points), class_points))
    classes.sort()
    for j, (_, class_points) in enumerate(classes):
        eid = f"e{j}"
        src = vertex_of_point[class_points[0]]
        dst = vertex_of_point[pa.tau[class_points[0]]]
        edges[eid] = (src, dst)
        for p in class_points:
            edge_of_point[p] = eid
    graph = MnGraph(params, vertices, edges)
    return BassSerreMaps(graph, tuple(vertex_of_point), edge_of_point, orbit_points)


def bass_serre(pa: PreAction) -> MnGraph:
    return bass_serre_with_maps(pa).graph


# -------------------------------------------------------------- realization

def realize(g: MnGraph) -> PreAction:
    """A pre-action whose quotient graph is (isomorphic to) g.

    Point count is the sum of the labels; complete exactly when g is
    saturated.  Infinite labels are out of scope here (graph-level
    operations still accept them).
    """
    empty = PreAction(g.params, 0, ())
    return realize_extending(empty, g, {}, {})


def realize_extending(
    pa: PreAction,
    g: MnGraph,
    vertex_embedding: dict[str, str],
    edge_embedding: dict[str, str],
) -> PreAction:
    """Extend a pre-action along an inclusion of its quotient graph into g.

    The embeddings send the vertices/edges of bass_serre(pa) into g; they
    must be injective, label preserving, and commute with endpoints.  The
    result restricted to the old points is exactly pa.
    """
    require_valid(g)
    if any(is_inf(label) for label in g.vertices.values()):
        raise InfiniteLabel("realization needs finite labels")
    params = g.params
    maps = bass_serre_with_maps(pa)
    bs = maps.graph
    _check_embedding(bs, g, vertex_embedding, edge_embedding)

    points_of: dict[str, list[int]] = {}
    beta = list(pa.beta)
    inv_vertex = {gv: bv for bv, gv in vertex_embedding.items()}
    next_point = pa.n_points
    for gv in sorted(g.vertices):
        if gv in inv_vertex:
            points_of[gv] = list(maps.orbit_points[inv_vertex[gv]])
        else:
            size = g.vertices[gv]
            block = list(range(next_point, next_point + size))
            next_point += size
            beta.extend(block[1:] + block[:1])
            points_of[gv] = block

    tau = dict(pa.tau)
    dom = set(tau)
    rng = set(tau.values())
    mapped_edges = set(edge_embedding.values())

    def free_classes(gv: str, step: int, taken: set[int]) -> list[list[int]]:
        block = points_of[gv]
        size = len(block)
        cls = ext_gcd(size, step)
        out = []
        for r in range(cls):
            pts = [block[(r + k * step) % size] for k in range(size // cls)]
            if pts[0] not in taken:
                out.append(pts)
        out.sort(key=min)
        return out

    for ge in sorted(g.pos_edges):
        if ge in mapped_edges:
            continue
        src, dst = g.pos_edges[ge]
        out_classes = free_classes(src, params.n, dom)
        in_classes = free_classes(dst, params.m, rng)
        if not out_classes or not in_classes:
            raise EmbeddingMismatch(f"no free orbit slot left for edge {ge}")
        src_class = out_classes[0]
        dst_class = in_classes[0]
        if len(src_class) != len(dst_class):
            raise EmbeddingMismatch(f"orbit size mismatch wiring edge {ge}")
        for k, x in enumerate(src_class):
            tau[x] = dst_class[k]
        dom.update(src_class)
        rng.update(dst_class)

    kind = COMPLETE if is_saturated(g) else TRUNCATED
    result = PreAction(params, next_point, tuple(beta), tau, kind)
    return require_valid_preaction(result)


def _check_embedding(bs: MnGraph, g: MnGraph, vertex_embedding, edge_embedding):
    if set(vertex_embedding) != set(bs.vertices):
        raise EmbeddingMismatch("vertex embedding must cover the quotient graph")
    if len(set(vertex_embedding.values())) != len(vertex_embedding):
        raise EmbeddingMismatch("vertex embedding is not injective")
    for bv, gv in vertex_embedding.items():
        if gv not in g.vertices:
            raise EmbeddingMismatch(f"unknown host vertex {gv!r}")
        if g.vertices[gv] != bs.vertices[bv]:
            raise EmbeddingMismatch(f"label changes along the embedding at {bv!r}")
    if set(edge_embedding) != set(bs.pos_edges):
        raise EmbeddingMismatch("edge embedding must cover the quotient graph")
    if len(set(edge_embedding.values())) != len(edge_embedding):
        raise EmbeddingMismatch("edge embedding is not injective")
    for be, ge in edge_embedding.items():
        if ge not in g.pos_edges:
            raise EmbeddingMismatch(f"unknown host edge {ge!r}")
        bsrc, bdst = bs.pos_edges[be]
        gsrc, gdst = g.pos_edges[ge]
        if vertex_embedding[bsrc] != gsrc or vertex_embedding[bdst] != gdst:
            raise EmbeddingMismatch(f"edge {be!r} does not commute with endpoints")


# ----------------------------------------------------------------- merging

def merge_preactions(pa1: PreAction, pa2: PreAction, rounds: int) -> tuple[PreAction, dict[int, int], dict[int, int]]:
    """One transitive pre-action containing both inputs on disjoint points.

    Works on the quotient graphs (connect, weld twice, forest-saturate),
    then upgrades back, extending the disjoint union of the inputs.
    """
    if pa1.params != pa2.params:
        raise InvalidInput("parameter mismatch between the two pre-actions")
    require_valid_preaction(pa1)
    require_valid_preaction(pa2)
    for pa in (pa1, pa2):
        if set(pa.tau) == set(range(pa.n_points)) and set(pa.tau.values()) == set(range(pa.n_points)):
            raise NoFreeSlot("input pre-action is already an action")
    maps1 = bass_serre_with_maps(pa1)
    maps2 = bass_serre_with_maps(pa2)
    if not _connected(maps1.graph) or not _connected(maps2.graph):
        raise NotConnected("merge needs transitive pre-actions")
    q1 = phenotype(pa1.params, len(maps1.orbit_points["v0"]))
    q2 = phenotype(pa2.params, len(maps2.orbit_points["v0"]))
    if q1 != q2:
        raise PhenotypeMismatch(f"phenotypes differ: {q1} vs {q2}")

    merged: MergeResult = merge_graphs(maps1.graph, maps2.graph, rounds)

    offset = pa1.n_points
    map1 = {x: x for x in range(pa1.n_points)}
    map2 = {x: offset + x for x in range(pa2.n_points)}
    combined = PreAction(
        pa1.params,
        pa1.n_points + pa2.n_points,
        tuple(list(pa1.beta) + [offset + y for y in pa2.beta]),
        {**pa1.tau, **{offset + x: offset + y for x, y in pa2.tau.items()}},
        TRUNCATED,
    )
    cmaps = bass_serre_with_maps(combined)

    vertex_embedding = {}
    for cv, pts in cmaps.orbit_points.items():
        p = min(pts)
        if p < offset:
            vertex_embedding[cv] = merged.embed1[maps1.vertex_of_point[p]]
        else:
            vertex_embedding[cv] = merged.embed2[maps2.vertex_of_point[p - offset]]
    edge_embedding = {}
    for p, ce in cmaps.edge_of_point.items():
        if ce in edge_embedding:
            continue
        if p < offset:
            edge_embedding[ce] = merged.embed1_edges[maps1.edge_of_point[p]]
        else:
            edge_embedding[ce] = merged.embed2_edges[maps2.edge_of_point[p - offset]]

    result = realize_extending(combined, merged.graph, vertex_embedding, edge_embedding)
    return result, map1, map2


def _connected(g: MnGraph) -> bool:
    from .mn_graph import is_connected

    return is_connected(g)


# ---------------------------------------------------------------- evaluation

def evaluate(pa: PreAction, x: int, w: Word) -> Optional[int]:
    """Apply the word left to right; None as soon as a t-step leaves the
    domain (or a t-inverse step leaves the range)."""
    if not (0 <= x < pa.n_points):
        raise InvalidInput(f"point {x} out of range")
    tau_inv = pa.tau_inverse()
    orbits = beta_orbits(pa)
    cycle_of: dict[int, tuple[list[int], int]] = {}
    for orbit in orbits:
        for i, p in enumerate(orbit):
            cycle_of[p] = (orbit, i)
    cur = x
    for kind, a in w.syllables:
        if kind == "b":
            orbit, i = cycle_of[cur]
            cur = orbit[(i + a) % len(orbit)]
        else:
            steps = [a] if a in (-1, 1) else [1 if a > 0 else -1] * abs(a)
            for st in steps:
                if st == 1:
                    if cur not in pa.tau:
                        return None
                    cur = pa.tau[cur]
                else:
                    if cur not in tau_inv:
                        return None
                    cur = tau_inv[cur]
    return cur


# --------------------------------------------------------------------- balls

@dataclass(frozen=True)
class Ball:
    center: int
    distances: dict[int, int]
    b_edges: frozenset[tuple[int, int]]
    t_edges: frozenset[tuple[int, int]]


def _ball_distances(pa: PreAction, base: int, R: int) -> dict[int, int]:
    tau_inv = pa.tau_inverse()
    beta_inv = {pa.beta[i]: i for i in range(pa.n_points)}
    dist = {base: 0}
    frontier = [base]
    d = 0
    while frontier and d < R:
        d += 1
        nxt = []
        for x in frontier:
            for y in (pa.beta[x], beta_inv[x], pa.tau.get(x), tau_inv.get(x)):
                if y is not None and y not in dist:
                    dist[y] = d
                    nxt.append(y)
        frontier = nxt
    return dist


def ball(pointed: PointedAction, R: int) -> Ball:
    """Induced labeled subgraph of the Schreier graph within distance R.

    Radius zero is the bare basepoint: no edges, not even loops, so that
    any two pointed pre-actions agree at radius zero."""
    pa = pointed.pre
    dist = _ball_distances(pa, pointed.basepoint, R)
    if R == 0:
        return Ball(pointed.basepoint, dist, frozenset(), frozenset())
    inside = set(dist)
    b_edges = frozenset(
        (x, pa.beta[x]) for x in inside if pa.beta[x] in inside
    )
    t_edges = frozenset(
        (x, pa.tau[x]) for x in inside if x in pa.tau and pa.tau[x] in inside
    )
    return Ball(pointed.basepoint, dist, b_edges, t_edges)


def pointed_eq_R(a: PointedAction, b: PointedAction, R: int) -> bool:
    """Pointed labeled isomorphism of the two R-balls.

    Schreier graphs are deterministic per generator, so a synchronized
    traversal from the basepoints either builds the unique candidate
    isomorphism or finds a distinguishing word of length <= R.  Radius
    zero balls are bare basepoints and always agree.
    """
    if R == 0:
        return True
    da = _ball_distances(a.pre, a.basepoint, R)
    db = _ball_distances(b.pre, b.basepoint, R)
    ta_inv = a.pre.tau_inverse()
    tb_inv = b.pre.tau_inverse()
    beta_a_inv = {a.pre.beta[i]: i for i in range(a.pre.n_points)}
    beta_b_inv = {b.pre.beta[i]: i for i in range(b.pre.n_points)}

    def steps(pa, beta_inv, tau_inv, x):
        return (
            pa.beta[x],
            beta_inv[x],
            pa.tau.get(x),
            tau_inv.get(x),
        )

    fwd = {a.basepoint: b.basepoint}
    bwd = {b.basepoint: a.basepoint}
    queue = [(a.basepoint, b.basepoint)]
    while queue:
        xa, xb = queue.pop()
        sa = steps(a.pre, beta_a_inv, ta_inv, xa)
        sb = steps(b.pre, beta_b_inv, tb_inv, xb)
        for ya, yb in zip(sa, sb):
            ina = ya is not None and ya in da
            inb = yb is not None and yb in db
            if ina != inb:
                return False
            if not ina:
                continue
            if ya in fwd or yb in bwd:
                if fwd.get(ya) != yb or bwd.get(yb) != ya:
                    return False
                continue
            fwd[ya] = yb
            bwd[yb] = ya
            queue.append((ya, yb))
    return True


# ------------------------------------------------------------- wire formats

def preaction_to_json_obj(pa: PreAction, basepoint: Optional[int] = None) -> dict:
    obj = {
        "m": pa.params.m,
        "n": pa.params.n,
        "points": pa.n_points,
        "beta": list(pa.beta),
        "tau": [[x, pa.tau[x]] for x in sorted(pa.tau)],
        "kind": pa.kind,
    }
    if basepoint is not None:
        obj["basepoint"] = basepoint
    return obj


def preaction_from_json_obj(obj) -> tuple[PreAction, Optional[int]]:
    if not isinstance(obj, dict):
        raise InvalidInput("pre-action JSON must be an object")
    required = {"m", "n", "points", "beta", "tau", "kind"}
    unknown = set(obj) - required - {"basepoint"}
    if unknown:
        raise InvalidInput(f"unknown pre-action fields: {sorted(unknown)}")
    missing = required - set(obj)
    if missing:
        raise InvalidInput(f"missing pre-action fields: {sorted(missing)}")
    m, n, points = obj["m"], obj["n"], obj["points"]
    for name, value in (("m", m), ("n", n), ("points", points)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise InvalidInput(f"{name} must be an integer")
    if points < 0:
        raise InvalidInput("points must be >= 0")
    try:
        params = BSParams(m, n)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from None
    beta = obj["beta"]
    if not isinstance(beta, list) or len(beta) != points:
        raise InvalidInput("beta must list an image for every point")
    if any(not isinstance(v, int) or isinstance(v, bool) for v in beta):
        raise InvalidInput("beta entries must be integers")
    tau = {}
    if not isinstance(obj["tau"], list):
        raise InvalidInput("tau must be an array of pairs")
    for item in obj["tau"]:
        if not isinstance(item, list) or len(item) != 2:
            raise InvalidInput(f"bad tau entry {item!r}")
        x, y = item
        if any(not isinstance(v, int) or isinstance(v, bool) for v in (x, y)):
            raise InvalidInput(f"bad tau entry {item!r}")
        if x in tau:
            raise InvalidInput(f"duplicate tau source {x}")
        tau[x] = y
    kind = obj["kind"]
    if kind not in (COMPLETE, TRUNCATED):
        raise InvalidInput(f"bad kind {kind!r}")
    pa = PreAction(params, points, tuple(beta), tau, kind)
    report = validate_preaction(pa)
    if not report.ok:
        raise InvalidPreAction(report)
    basepoint = obj.get("basepoint")
    if basepoint is not None:
        if not isinstance(basepoint, int) or not (0 <= basepoint < points):
            raise InvalidInput(f"bad basepoint {basepoint!r}")
    return pa, basepoint


def schreier_to_json_obj(pa: PreAction, basepoint: Optional[int] = None) -> dict:
    obj = {
        "points": pa.n_points,
        "b_edges": [[x, pa.beta[x]] for x in range(pa.n_points)],
        "t_edges": [[x, pa.tau[x]] for x in sorted(pa.tau)],
    }
    if basepoint is not None:
        obj["basepoint"] = basepoint
    return obj


def schreier_to_dot(pa: PreAction) -> str:
    lines = ["digraph Schreier {"]
    for x in range(pa.n_points):
        lines.append(f'  "{x}";')
    for x in range(pa.n_points):
        lines.append(f'  "{x}" -> "{pa.beta[x]}" [label="b"];')
    for x in sorted(pa.tau):
        lines.append(f'  "{x}" -> "{pa.tau[x]}" [label="t"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
