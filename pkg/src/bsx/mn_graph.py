"""Oriented vertex-labeled multigraphs subject to the transfer equation
and the degree bounds, together with the rewriting toolbox: welding,
connecting paths, forest-saturation, merging, flipping.

Conventions: only positive edges are stored; the reverse edges are
implicit.  Edge labels are never stored, they are derived from the source
label (storing them would only create a consistency burden).  Loops and
parallel edges are first-class.  Labels may be infinite; a single edge
never mixes a finite and an infinite endpoint (the validator enforces it),
but distinct components may differ.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .arith import (
    INF,
    BSParams,
    ExtCard,
    check_card,
    ext_div,
    ext_gcd,
    ext_mul,
    factorize,
    is_inf,
    phenotype,
    valuation,
)
from .errors import (
    DegreeOverflow,
    InfiniteLabel,
    InvalidGraph,
    InvalidInput,
    LabelMismatch,
    NoFreeSlot,
    NotConnected,
    PhenotypeMismatch,
)


@dataclass(frozen=True)
class Violation:
    kind: str  # TransferMismatch | OutDegreeOverflow | InDegreeOverflow | DanglingEdge
    location: str

    def as_json(self):
        return {"kind": self.kind, "location": self.location}


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_json(self):
        return {"ok": self.ok, "violations": [v.as_json() for v in self.violations]}


@dataclass(frozen=True)
class SaturationReport:
    deficits: dict[str, tuple[int, int]]  # vertex -> (missing_out, missing_in)

    @property
    def saturated(self) -> bool:
        return all(o == 0 and i == 0 for o, i in self.deficits.values())


@dataclass
class MnGraph:
    params: BSParams
    vertices: dict[str, ExtCard] = field(default_factory=dict)
    pos_edges: dict[str, tuple[str, str]] = field(default_factory=dict)

    def copy(self) -> "MnGraph":
        return MnGraph(self.params, dict(self.vertices), dict(self.pos_edges))

    def degout(self, v: str) -> int:
        return sum(1 for s, _ in self.pos_edges.values() if s == v)

    def degin(self, v: str) -> int:
        return sum(1 for _, t in self.pos_edges.values() if t == v)

    def edge_label(self, e: str) -> ExtCard:
        src, _ = self.pos_edges[e]
        label = self.vertices[src]
        return ext_div(label, ext_gcd(label, self.params.n))


def _degrees(g: MnGraph) -> tuple[Counter, Counter]:
    out, inc = Counter(), Counter()
    for s, t in g.pos_edges.values():
        out[s] += 1
        inc[t] += 1
    return out, inc


def validate(g: MnGraph) -> ValidationReport:
    """Check the transfer equation on every edge and both degree bounds on
    every vertex; violations come back as data, nothing raises."""
    m, n = g.params.m, g.params.n
    violations = []
    for v, label in g.vertices.items():
        check_card(label)
    out, inc = _degrees(g)
    for e in sorted(g.pos_edges):
        src, dst = g.pos_edges[e]
        if src not in g.vertices or dst not in g.vertices:
            violations.append(Violation("DanglingEdge", e))
            continue
        ls, lt = g.vertices[src], g.vertices[dst]
        if is_inf(ls) != is_inf(lt):
            violations.append(Violation("TransferMismatch", e))
            continue
        if not is_inf(ls):
            if ls // ext_gcd(ls, n) != lt // ext_gcd(lt, m):
                violations.append(Violation("TransferMismatch", e))
    for v in sorted(g.vertices):
        label = g.vertices[v]
        if out[v] > ext_gcd(label, n):
            violations.append(Violation("OutDegreeOverflow", v))
        if inc[v] > ext_gcd(label, m):
            violations.append(Violation("InDegreeOverflow", v))
    return ValidationReport(tuple(violations))


def require_valid(g: MnGraph) -> MnGraph:
    report = validate(g)
    if not report.ok:
        raise InvalidGraph(report)
    return g


def saturation_report(g: MnGraph) -> SaturationReport:
    out, inc = _degrees(g)
    deficits = {}
    for v, label in g.vertices.items():
        deficits[v] = (ext_gcd(label, g.params.n) - out[v], ext_gcd(label, g.params.m) - inc[v])
    return SaturationReport(deficits)


def is_saturated(g: MnGraph) -> bool:
    return saturation_report(g).saturated


def components(g: MnGraph) -> list[tuple[str, ...]]:
    """Connected components (edges taken both ways), as sorted id tuples."""
    adj: dict[str, set[str]] = {v: set() for v in g.vertices}
    for s, t in g.pos_edges.values():
        adj[s].add(t)
        adj[t].add(s)
    seen: set[str] = set()
    comps = []
    for v in sorted(g.vertices):
        if v in seen:
            continue
        stack, comp = [v], []
        seen.add(v)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected(g: MnGraph) -> bool:
    return len(components(g)) <= 1


def graph_phenotype(g: MnGraph) -> dict[tuple[str, ...], ExtCard]:
    """Per component, the common phenotype of its vertex labels."""
    require_valid(g)
    result = {}
    for comp in components(g):
        phes = {v: phenotype(g.params, g.vertices[v]) for v in comp}
        values = set()
        for q in phes.values():
            values.add("inf" if is_inf(q) else q)
        if len(values) != 1:
            raise InvalidGraph(message="component with inconsistent phenotypes")
        result[comp] = phes[comp[0]]
    return result


def admissible_neighbor_labels(params: BSParams, label: ExtCard, direction: str) -> list[ExtCard]:
    """Exact set of labels a single new edge can carry on its far end.

    ``direction`` is "outgoing" (new edge leaves ``label``) or "incoming".
    The infinite label only ever neighbors itself.
    """
    check_card(label)
    if direction not in ("outgoing", "incoming"):
        raise ValueError(f"bad direction {direction!r}")
    if is_inf(label):
        return [INF]
    near, far = (params.n, params.m) if direction == "outgoing" else (params.m, params.n)
    c = label // ext_gcd(label, near)
    base = c
    for p, _ in factorize(c):
        base *= p ** valuation(far, p)
    free = 1
    for p, e in factorize(far):
        if c % p != 0:
            free *= p**e
    divisors = [d for d in range(1, free + 1) if free % d == 0]
    return sorted(base * d for d in divisors)


# ------------------------------------------------------------------ welding

def weld(g: MnGraph, v: str, w: str) -> MnGraph:
    """Identify two same-labeled vertices whose combined degrees stay
    within the bounds; the second id disappears."""
    if v == w:
        raise ValueError("cannot weld a vertex with itself")
    if v not in g.vertices or w not in g.vertices:
        raise InvalidInput(f"unknown vertex in weld: {v!r}, {w!r}")
    lv, lw = g.vertices[v], g.vertices[w]
    if (is_inf(lv) != is_inf(lw)) or (not is_inf(lv) and lv != lw):
        raise LabelMismatch(f"labels differ: {lv} vs {lw}")
    out, inc = _degrees(g)
    if out[v] + out[w] > ext_gcd(lv, g.params.n):
        raise DegreeOverflow(f"outgoing degree would exceed gcd(n, L) at {v}")
    if inc[v] + inc[w] > ext_gcd(lv, g.params.m):
        raise DegreeOverflow(f"incoming degree would exceed gcd(m, L) at {v}")
    vertices = dict(g.vertices)
    del vertices[w]
    edges = {}
    for e, (s, t) in g.pos_edges.items():
        edges[e] = (v if s == w else s, v if t == w else t)
    return MnGraph(g.params, vertices, edges)


# --------------------------------------------------------------- connecting

@dataclass(frozen=True)
class _Segment:
    """A simple edge path as label/orientation data; vertices are created
    only when the final graph is assembled."""

    labels: tuple[ExtCard, ...]
    orients: tuple[str, ...]  # '+' or '-' per edge, in traversal order

    @property
    def first(self) -> str:
        return self.orients[0]

    @property
    def last(self) -> str:
        return self.orients[-1]


def _seg_flip(seg: _Segment) -> _Segment:
    return _Segment(seg.labels, tuple("-" if o == "+" else "+" for o in seg.orients))


def _seg_reverse(seg: _Segment) -> _Segment:
    return _Segment(
        tuple(reversed(seg.labels)),
        tuple("-" if o == "+" else "+" for o in reversed(seg.orients)),
    )


def _seg_join(a: _Segment, b: _Segment) -> _Segment:
    if a.labels[-1] != b.labels[0]:
        raise AssertionError("segment junction labels differ")
    return _Segment(a.labels + b.labels[1:], a.orients + b.orients)


def _join_feasible(params: BSParams, label: ExtCard, arrive: str, depart: str) -> bool:
    degin = (arrive == "+") + (depart == "-")
    degout = (arrive == "-") + (depart == "+")
    return degin <= ext_gcd(label, params.m) and degout <= ext_gcd(label, params.n)


def _min_forward_label(params: BSParams, label: int) -> int:
    """Smallest admissible target of a positive edge leaving ``label``."""
    c = label // ext_gcd(label, params.n)
    out = c
    for p, _ in factorize(c):
        out *= p ** valuation(params.m, p)
    return out


def _min_backward_label(params: BSParams, label: int) -> int:
    """Smallest admissible source of a positive edge entering ``label``."""
    c = label // ext_gcd(label, params.m)
    out = c
    for p, _ in factorize(c):
        out *= p ** valuation(params.n, p)
    return out


def _bridge(params: BSParams, label: ExtCard, o1: str, o2: str) -> _Segment:
    """Path from ``label`` to itself with prescribed end orientations.

    Used both at a phenotype fixed point q (where gcd(q,m) = gcd(q,n)) and
    at the infinite label.
    """
    if o1 == o2:
        return _Segment((label, label), (o1,))
    if o1 == "+":
        mid = ext_mul(ext_div(label, ext_gcd(label, params.n)), params.m)
        return _Segment((label, mid, label), ("+", "-"))
    mid = ext_mul(ext_div(label, ext_gcd(label, params.m)), params.n)
    return _Segment((label, mid, label), ("-", "+"))


def _forward_run(params: BSParams, start: int, qprimes: frozenset[int]) -> list[int]:
    """Greedy positive-edge run: take minimal targets while the current
    label keeps a prime outside the phenotype where m's valuation does not
    exceed n's.  Terminates because those valuations strictly drop."""
    labels = [start]
    while True:
        cur = labels[-1]
        eligible = any(
            p not in qprimes and valuation(params.m, p) <= valuation(params.n, p)
            for p, _ in factorize(cur)
        )
        if not eligible:
            return labels
        labels.append(_min_forward_label(params, cur))


def _descent(params: BSParams, k: int, q: int) -> _Segment:
    """Simple path from label k down to its phenotype q (k != q)."""
    qprimes = frozenset(p for p, _ in factorize(q))
    forward = _forward_run(params, k, qprimes)
    labels = list(forward)
    orients = ["+"] * (len(forward) - 1)
    if labels[-1] != q:
        back = _forward_run(params.swapped(), labels[-1], qprimes)
        if back[-1] != q:
            raise AssertionError("descent did not reach the phenotype")
        labels.extend(back[1:])
        orients.extend(["-"] * (len(back) - 1))
    return _Segment(tuple(labels), tuple(orients))


def _segment_to_phenotype(params: BSParams, k: int, q: int, want_first: str) -> _Segment:
    """Simple path from k (!= q) to q whose first edge has the requested
    orientation."""
    qprimes = frozenset(p for p, _ in factorize(q))
    has_le = any(
        p not in qprimes and valuation(params.m, p) <= valuation(params.n, p)
        for p, _ in factorize(k)
    )
    has_ge = any(
        p not in qprimes and valuation(params.n, p) <= valuation(params.m, p)
        for p, _ in factorize(k)
    )
    if want_first == "+":
        if has_le:
            return _descent(params, k, q)
        # every non-phenotype prime of k strictly favors m: force one
        # positive edge first, then descend from wherever it lands
        nxt = _min_forward_label(params, k)
        head = _Segment((k, nxt), ("+",))
        if nxt == q:
            return head
        return _seg_join(head, _descent(params, nxt, q))
    if has_ge:
        return _seg_flip(_segment_to_phenotype(params.swapped(), k, q, "+"))
    nxt = _min_backward_label(params, k)
    head = _Segment((k, nxt), ("-",))
    if nxt == q:
        return head
    return _seg_join(head, _descent(params, nxt, q))


@dataclass(frozen=True)
class PathResult:
    graph: MnGraph
    start: str
    end: str


def _seg_to_graph(params: BSParams, seg: _Segment) -> PathResult:
    vertices = {f"p{i}": label for i, label in enumerate(seg.labels)}
    edges = {}
    for i, o in enumerate(seg.orients):
        a, b = f"p{i}", f"p{i + 1}"
        edges[f"e{i + 1}"] = (a, b) if o == "+" else (b, a)
    g = MnGraph(params, vertices, edges)
    return PathResult(g, "p0", f"p{len(seg.labels) - 1}")


def _build_connecting_segment(params: BSParams, k: ExtCard, l: ExtCard, orient_k: str, orient_l: str) -> _Segment:
    q = phenotype(params, k)
    if is_inf(k) or is_inf(l):
        if not (is_inf(k) and is_inf(l)):
            raise PhenotypeMismatch(f"phenotypes differ: {q} vs {phenotype(params, l)}")
        return _bridge(params, INF, orient_k, orient_l)
    if phenotype(params, l) != q:
        raise PhenotypeMismatch(f"phenotypes differ: {q} vs {phenotype(params, l)}")
    if k == q and l == q:
        return _bridge(params, q, orient_k, orient_l)
    if k != q:
        left = _segment_to_phenotype(params, k, q, orient_k)
    else:
        left = None
    if l != q:
        right = _seg_reverse(_segment_to_phenotype(params, l, q, "-" if orient_l == "+" else "+"))
    else:
        right = None
    if right is None:
        if left.last == orient_l:
            return left
        return _seg_join(left, _bridge(params, q, left.last, orient_l))
    if left is None:
        if right.first == orient_k:
            return right
        return _seg_join(_bridge(params, q, orient_k, right.first), right)
    if _join_feasible(params, q, left.last, right.first):
        return _seg_join(left, right)
    return _seg_join(_seg_join(left, _bridge(params, q, left.last, right.first)), right)


def connect_path(params: BSParams, k: int, l: int, orient_k: str, orient_l: str) -> PathResult:
    """A valid simple edge path whose first vertex is labeled k, last is
    labeled l, with the two end edges in the requested orientation classes.

    Both end vertices carry exactly one incident edge, so the path can be
    welded onto vertices with a free slot.  Exists exactly when the two
    labels share their phenotype.
    """
    params.require_large()
    if orient_k not in "+-" or orient_l not in "+-":
        raise ValueError("orientations must be '+' or '-'")
    if not (isinstance(k, int) and k >= 1 and isinstance(l, int) and l >= 1):
        raise ValueError("end labels must be positive integers")
    seg = _build_connecting_segment(params, k, l, orient_k, orient_l)
    return _seg_to_graph(params, seg)


# ----------------------------------------------------------- saturation

def _fresh_ids(taken: Iterable[str], prefix: str):
    used = set(taken)
    i = 0
    while True:
        cand = f"{prefix}{i}"
        if cand not in used:
            used.add(cand)
            yield cand
        i += 1


def forest_saturate(g: MnGraph, rounds: int) -> tuple[MnGraph, frozenset[str]]:
    """Repair degree deficits for ``rounds`` iterations.

    Each round gives every currently unsaturated vertex its missing edges,
    wired to fresh vertices carrying the maximal admissible label (the out
    side gets |m| times the out edge label, the in side |n| times the in
    edge label).  The new vertices form a forest, each tree hanging off the
    old graph by a single edge; after any full round only the newest
    vertices can still be unsaturated.
    """
    require_valid(g)
    if rounds < 0:
        raise ValueError("rounds must be >= 0")
    h = g.copy()
    vertex_ids = _fresh_ids(h.vertices, "w")
    edge_ids = _fresh_ids(h.pos_edges, "f")
    last_added: list[str] = []
    for _ in range(rounds):
        report = saturation_report(h)
        todo = [v for v in sorted(h.vertices) if report.deficits[v] != (0, 0)]
        if not todo:
            last_added = []
            break
        added = []
        for v in todo:
            label = h.vertices[v]
            missing_out, missing_in = report.deficits[v]
            l_out = ext_div(label, ext_gcd(label, h.params.n))
            for _ in range(missing_out):
                w = next(vertex_ids)
                h.vertices[w] = ext_mul(l_out, h.params.m)
                h.pos_edges[next(edge_ids)] = (v, w)
                added.append(w)
            l_in = ext_div(label, ext_gcd(label, h.params.m))
            for _ in range(missing_in):
                w = next(vertex_ids)
                h.vertices[w] = ext_mul(l_in, h.params.n)
                h.pos_edges[next(edge_ids)] = (w, v)
                added.append(w)
        last_added = added
    final = saturation_report(h)
    frontier = frozenset(v for v in last_added if final.deficits[v] != (0, 0))
    return h, frontier


# -------------------------------------------------------------- merging

@dataclass(frozen=True)
class MergeResult:
    graph: MnGraph
    embed1: dict[str, str]
    embed2: dict[str, str]
    frontier: frozenset[str]
    embed1_edges: dict[str, str]
    embed2_edges: dict[str, str]


def _free_slot(g: MnGraph) -> tuple[str, str]:
    """Smallest unsaturated vertex and the orientation of a missing edge
    ending there: '+' for a free incoming slot, '-' for outgoing."""
    report = saturation_report(g)
    for v in sorted(g.vertices):
        missing_out, missing_in = report.deficits[v]
        if missing_in > 0:
            return v, "+"
        if missing_out > 0:
            return v, "-"
    raise NoFreeSlot("graph is saturated")


def merge_graphs(g1: MnGraph, g2: MnGraph, rounds: int) -> MergeResult:
    """Embed two connected, non-saturated, same-phenotype graphs into one
    connected graph: connect free slots by a path, weld both ends, then
    forest-saturate.  The returned maps are label- and edge-preserving
    embeddings with disjoint images."""
    if g1.params != g2.params:
        raise InvalidInput("parameter mismatch between the two graphs")
    params = g1.params
    params.require_large()
    require_valid(g1)
    require_valid(g2)
    if not is_connected(g1) or not is_connected(g2):
        raise NotConnected("merge needs connected inputs")
    if not g1.vertices or not g2.vertices:
        raise NotConnected("merge needs non-empty inputs")
    q1 = next(iter(graph_phenotype(g1).values()))
    q2 = next(iter(graph_phenotype(g2).values()))
    if (is_inf(q1) != is_inf(q2)) or (not is_inf(q1) and q1 != q2):
        raise PhenotypeMismatch(f"phenotypes differ: {q1} vs {q2}")
    v1, eps1 = _free_slot(g1)
    v2, eps2 = _free_slot(g2)

    seg = _build_connecting_segment(
        params,
        g1.vertices[v1],
        g2.vertices[v2],
        "-" if eps1 == "+" else "+",
        eps2,
    )
    path = _seg_to_graph(params, seg)

    embed1 = {v: f"a:{v}" for v in g1.vertices}
    embed2 = {v: f"b:{v}" for v in g2.vertices}
    embed1_edges = {e: f"a:{e}" for e in g1.pos_edges}
    embed2_edges = {e: f"b:{e}" for e in g2.pos_edges}
    union = MnGraph(params)
    for v, label in g1.vertices.items():
        union.vertices[embed1[v]] = label
    for e, (s, t) in g1.pos_edges.items():
        union.pos_edges[embed1_edges[e]] = (embed1[s], embed1[t])
    for v, label in g2.vertices.items():
        union.vertices[embed2[v]] = label
    for e, (s, t) in g2.pos_edges.items():
        union.pos_edges[embed2_edges[e]] = (embed2[s], embed2[t])
    for v, label in path.graph.vertices.items():
        union.vertices[f"c:{v}"] = label
    for e, (s, t) in path.graph.pos_edges.items():
        union.pos_edges[f"c:{e}"] = (f"c:{s}", f"c:{t}")

    union = weld(union, embed1[v1], f"c:{path.start}")
    union = weld(union, embed2[v2], f"c:{path.end}")
    merged, frontier = forest_saturate(union, rounds)
    return MergeResult(merged, embed1, embed2, frontier, embed1_edges, embed2_edges)


# ------------------------------------------------------------- flip, misc

def flip(g: MnGraph) -> MnGraph:
    """Reverse every edge; the result lives over the swapped parameters."""
    require_valid(g)
    return MnGraph(
        g.params.swapped(),
        dict(g.vertices),
        {e: (t, s) for e, (s, t) in g.pos_edges.items()},
    )


def detect_unbounded(g: MnGraph) -> Optional[tuple[str, int]]:
    """A witness (vertex, prime) that forces any saturated extension to
    have unbounded labels; None when no finite label certifies it."""
    require_valid(g)
    params = g.params
    support = sorted(
        p
        for p in {p for p, _ in factorize(params.m)} | {p for p, _ in factorize(params.n)}
        if valuation(params.m, p) != valuation(params.n, p)
    )
    if not support:
        return None
    for v in sorted(g.vertices):
        label = g.vertices[v]
        if is_inf(label):
            continue
        for p in support:
            if valuation(label, p) > min(valuation(params.m, p), valuation(params.n, p)):
                return v, p
    return None


def graph_of_groups(g: MnGraph) -> dict[str, tuple[int, int]]:
    """Per positive edge, the two injection multipliers of the cyclic
    edge group into the source and target vertex groups."""
    require_valid(g)
    if any(is_inf(label) for label in g.vertices.values()):
        raise InfiniteLabel("graph-of-groups labels need finite vertex labels")
    out = {}
    for e in sorted(g.pos_edges):
        src, dst = g.pos_edges[e]
        ls, lt = g.vertices[src], g.vertices[dst]
        out[e] = (g.params.n // ext_gcd(ls, g.params.n), g.params.m // ext_gcd(lt, g.params.m))
    return out


# ---------------------------------------------------------- isomorphism

def isomorphic(g1: MnGraph, g2: MnGraph) -> bool:
    """Labeled multigraph isomorphism by backtracking; intended for the
    desk-scale graphs this toolkit manipulates."""
    if g1.params != g2.params:
        return False
    if len(g1.vertices) != len(g2.vertices) or len(g1.pos_edges) != len(g2.pos_edges):
        return False

    def key(label):
        return ("inf",) if is_inf(label) else ("fin", label)

    def signature(g):
        out, inc = _degrees(g)
        return {v: (key(g.vertices[v]), out[v], inc[v]) for v in g.vertices}

    sig1, sig2 = signature(g1), signature(g2)
    if sorted(sig1.values()) != sorted(sig2.values()):
        return False
    edges1 = Counter(g1.pos_edges.values())
    edges2 = Counter(g2.pos_edges.values())

    order = sorted(g1.vertices, key=lambda v: (sig1[v], v))
    candidates = {v: [w for w in g2.vertices if sig2[w] == sig1[v]] for v in order}
    assignment: dict[str, str] = {}
    used: set[str] = set()

    adj1: dict[str, Counter] = {v: Counter() for v in g1.vertices}
    for (s, t), c in edges1.items():
        adj1[s][("out", t)] += c
        adj1[t][("in", s)] += c

    def consistent(v, w):
        for (direction, u), c in adj1[v].items():
            if u in assignment:
                pair = (w, assignment[u]) if direction == "out" else (assignment[u], w)
                if direction == "out" and u == v:
                    pair = (w, w)
                if edges2[pair] != c:
                    return False
        return True

    def backtrack(i):
        if i == len(order):
            return True
        v = order[i]
        for w in candidates[v]:
            if w in used:
                continue
            assignment[v] = w
            if consistent(v, w):
                used.add(w)
                if backtrack(i + 1):
                    return True
                used.remove(w)
            del assignment[v]
        return False

    return backtrack(0)


# ------------------------------------------------------------- wire formats

def label_to_json(label: ExtCard):
    return "inf" if is_inf(label) else label


def label_from_json(value) -> ExtCard:
    if value == "inf":
        return INF
    if isinstance(value, int) and not isinstance(value, bool) and value >= 1:
        return value
    raise InvalidInput(f"bad label {value!r}")


def graph_to_json_obj(g: MnGraph) -> dict:
    return {
        "m": g.params.m,
        "n": g.params.n,
        "vertices": [
            {"id": v, "label": label_to_json(g.vertices[v])} for v in sorted(g.vertices)
        ],
        "edges": [
            {"id": e, "src": g.pos_edges[e][0], "dst": g.pos_edges[e][1]}
            for e in sorted(g.pos_edges)
        ],
    }


def graph_from_json_obj(obj) -> MnGraph:
    if not isinstance(obj, dict):
        raise InvalidInput("graph JSON must be an object")
    expected = {"m", "n", "vertices", "edges"}
    unknown = set(obj) - expected
    if unknown:
        raise InvalidInput(f"unknown graph fields: {sorted(unknown)}")
    missing = expected - set(obj)
    if missing:
        raise InvalidInput(f"missing graph fields: {sorted(missing)}")
    m, n = obj["m"], obj["n"]
    if not isinstance(m, int) or not isinstance(n, int) or isinstance(m, bool) or isinstance(n, bool):
        raise InvalidInput("m and n must be integers")
    try:
        params = BSParams(m, n)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from None
    g = MnGraph(params)
    if not isinstance(obj["vertices"], list) or not isinstance(obj["edges"], list):
        raise InvalidInput("vertices and edges must be arrays")
    for item in obj["vertices"]:
        if not isinstance(item, dict) or set(item) != {"id", "label"}:
            raise InvalidInput(f"bad vertex entry {item!r}")
        vid = item["id"]
        if not isinstance(vid, str) or vid in g.vertices:
            raise InvalidInput(f"bad or duplicate vertex id {vid!r}")
        g.vertices[vid] = label_from_json(item["label"])
    for item in obj["edges"]:
        if not isinstance(item, dict) or set(item) != {"id", "src", "dst"}:
            raise InvalidInput(f"bad edge entry {item!r}")
        eid = item["id"]
        if not isinstance(eid, str) or eid in g.pos_edges:
            raise InvalidInput(f"bad or duplicate edge id {eid!r}")
        if item["src"] not in g.vertices or item["dst"] not in g.vertices:
            raise InvalidInput(f"edge {eid!r} references unknown vertices")
        g.pos_edges[eid] = (item["src"], item["dst"])
    return g


def graph_to_dot(g: MnGraph) -> str:
    lines = ["digraph G {"]
    for v in sorted(g.vertices):
        lines.append(f'  "{v}" [label="{label_to_json(g.vertices[v])}"];')
    for e in sorted(g.pos_edges):
        s, t = g.pos_edges[e]
        lines.append(f'  "{s}" -> "{t}" [label="{label_to_json(g.edge_label(e))}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
