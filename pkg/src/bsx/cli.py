"""Command line front end: every subcommand is a thin adapter over one
library operation, reading the canonical JSON formats and writing JSON
(or DOT) to stdout.

Exit codes: 0 on success, 1 when validation or a precondition fails (the
report goes to stdout as JSON), 2 on usage errors.  Set BSX_LOG to a level
name for diagnostics on stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import service
from .arith import INF, BSParams, is_inf, phenotype
from .errors import BsxError, InvalidGraph, InvalidInput, InvalidPreAction
from .mn_graph import (
    admissible_neighbor_labels,
    connect_path,
    flip,
    forest_saturate,
    graph_from_json_obj,
    graph_to_json_obj,
    merge_graphs,
    weld,
)
from .preaction import (
    PointedAction,
    bass_serre,
    evaluate,
    preaction_from_json_obj,
    preaction_to_json_obj,
    realize,
    schreier_to_dot,
    schreier_to_json_obj,
)
from .service import dumps, validation_payload
from .subgroups import classify_kernel, mcq_member, quotient_action
from .words import parse_word

log = logging.getLogger("bsx")


def _emit(obj):
    sys.stdout.write(dumps(obj) + "\n")


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path} is not JSON: {exc}") from None


def _load_graph(path: str):
    return graph_from_json_obj(_load_json(path))


def _load_preaction(path: str):
    return preaction_from_json_obj(_load_json(path))


def _parse_card(text: str):
    if text == "inf":
        return INF
    try:
        value = int(text)
    except ValueError:
        raise InvalidInput(f"bad label {text!r}") from None
    if value < 1:
        raise InvalidInput(f"bad label {text!r}")
    return value




def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bsx", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("phenotype", help="phenotype of a cardinality")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("k", help="positive integer or 'inf'")

    p = sub.add_parser("validate", help="check a graph file against the axioms")
    p.add_argument("file")

    p = sub.add_parser("admissible", help="labels one edge away from a label")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--label", required=True)
    p.add_argument("--dir", choices=["out", "in"], required=True)

    p = sub.add_parser("weld", help="identify two same-labeled vertices")
    p.add_argument("file")
    p.add_argument("v")
    p.add_argument("w")

    p = sub.add_parser("connect", help="simple path between two labels")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--from", dest="src", type=int, required=True)
    p.add_argument("--to", dest="dst", type=int, required=True)
    p.add_argument("--from-orient", choices=["+", "-"], required=True)
    p.add_argument("--to-orient", choices=["+", "-"], required=True)

    p = sub.add_parser("saturate", help="forest-saturate a graph")
    p.add_argument("file")
    p.add_argument("--rounds", type=int, default=1)

    p = sub.add_parser("merge", help="merge two graphs of equal phenotype")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--rounds", type=int, default=1)

    p = sub.add_parser("flip", help="reverse all edges, swapping m and n")
    p.add_argument("file")

    p = sub.add_parser("realize", help="pre-action with the given quotient graph")
    p.add_argument("file")

    p = sub.add_parser("bass-serre", help="quotient graph of a pre-action")
    p.add_argument("file")

    p = sub.add_parser("schreier", help="Schreier graph of a pre-action")
    p.add_argument("file")
    p.add_argument("--dot", action="store_true")

    p = sub.add_parser("eval", help="apply a word to a point")
    p.add_argument("file")
    p.add_argument("--point", type=int, required=True)
    p.add_argument("--word", required=True)

    p = sub.add_parser("classify", help="perfect-kernel verdict for a file")
    p.add_argument("file")

    p = sub.add_parser("mcq", help="maximal-compact membership for a pointed action")
    p.add_argument("file")

    p = sub.add_parser("quotient", help="truncated action on the quotient by b^q")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("--window", type=int, default=3)

    p = sub.add_parser("serve", help="run the local HTTP service")
    p.add_argument("--port", type=int, default=8471)

    return parser


def run(argv) -> int:
    level = os.environ.get("BSX_LOG")
    if level:
        logging.basicConfig(level=level.upper(), stream=sys.stderr)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except (InvalidGraph, InvalidPreAction) as exc:
        payload = exc.report.as_json() if exc.report is not None else {}
        _emit({"error": type(exc).__name__, **payload})
        return 1
    except BsxError as exc:
        _emit({"error": type(exc).__name__, "detail": str(exc)})
        return 1


def _dispatch(args) -> int:
    cmd = args.command
    if cmd == "phenotype":
        q = phenotype(BSParams(args.m, args.n), _parse_card(args.k))
        sys.stdout.write(("inf" if is_inf(q) else str(q)) + "\n")
        return 0
    if cmd == "validate":
        payload = validation_payload(_load_graph(args.file))
        _emit(payload)
        return 0 if payload["ok"] else 1
    if cmd == "admissible":
        direction = "outgoing" if args.dir == "out" else "incoming"
        labels = admissible_neighbor_labels(BSParams(args.m, args.n), _parse_card(args.label), direction)
        _emit({"labels": ["inf" if is_inf(l) else l for l in labels]})
        return 0
    if cmd == "weld":
        g = weld(_load_graph(args.file), args.v, args.w)
        _emit(graph_to_json_obj(g))
        return 0
    if cmd == "connect":
        res = connect_path(BSParams(args.m, args.n), args.src, args.dst, args.from_orient, args.to_orient)
        _emit({"graph": graph_to_json_obj(res.graph), "start": res.start, "end": res.end})
        return 0
    if cmd == "saturate":
        g, frontier = forest_saturate(_load_graph(args.file), args.rounds)
        _emit({"graph": graph_to_json_obj(g), "frontier": sorted(frontier)})
        return 0
    if cmd == "merge":
        result = merge_graphs(_load_graph(args.file1), _load_graph(args.file2), args.rounds)
        _emit(
            {
                "graph": graph_to_json_obj(result.graph),
                "embed1": result.embed1,
                "embed2": result.embed2,
                "frontier": sorted(result.frontier),
            }
        )
        return 0
    if cmd == "flip":
        _emit(graph_to_json_obj(flip(_load_graph(args.file))))
        return 0
    if cmd == "realize":
        pa = realize(_load_graph(args.file))
        _emit(preaction_to_json_obj(pa))
        return 0
    if cmd == "bass-serre":
        pa, _ = _load_preaction(args.file)
        _emit(graph_to_json_obj(bass_serre(pa)))
        return 0
    if cmd == "schreier":
        pa, basepoint = _load_preaction(args.file)
        if args.dot:
            sys.stdout.write(schreier_to_dot(pa))
        else:
            _emit(schreier_to_json_obj(pa, basepoint))
        return 0
    if cmd == "eval":
        pa, _ = _load_preaction(args.file)
        out = evaluate(pa, args.point, parse_word(args.word))
        _emit({"result": out})
        return 0
    if cmd == "classify":
        obj = _load_json(args.file)
        data = _sniff(obj)
        _emit(classify_kernel(data).as_json())
        return 0
    if cmd == "mcq":
        pa, basepoint = _load_preaction(args.file)
        if basepoint is None:
            raise InvalidInput("mcq needs a basepoint in the pre-action file")
        _emit({"verdict": mcq_member(PointedAction(pa, basepoint))})
        return 0
    if cmd == "quotient":
        pointed = quotient_action(BSParams(args.m, args.n), args.q, args.window)
        _emit(preaction_to_json_obj(pointed.pre, pointed.basepoint))
        return 0
    if cmd == "serve":
        service.serve(args.port)
        return 0
    raise AssertionError(f"unhandled command {cmd}")


def _sniff(obj):
    """A graph file has vertices/edges; a pre-action file has beta/tau."""
    if isinstance(obj, dict) and "beta" in obj:
        pa, _ = preaction_from_json_obj(obj)
        return pa
    return graph_from_json_obj(obj)


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
