"""Command-line front end.

Exit status is 0 on success, 1 on domain errors (negative loop, unbalanced
input to ``--method koenig``, invalid coloring, oversized oracle instance)
and 2 on usage or input-format errors.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from .bounds import koenig_color, shannon_color
from .coloring import verify_coloring
from .exceptions import ColoringError, GraphFormatError, SignedColorError
from .formats import coloring_from_dict, coloring_to_dict, dumps, result_to_dict, signature_from_dict, to_dot
from .graph import build_graph, format_graph
from .layers import decompose_layers
from .oracle import MAX_EDGES, MAX_VERTICES, chromatic_index
from .signature import is_balanced, resign, signatures_equivalent


class UsageError(Exception):
    pass


def _load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return build_graph(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _cmd_color(args, out):
    G = _load(args.graph)
    method = args.method
    if method == "auto":
        method = "koenig" if is_balanced(G)[0] else "shannon"
    result = koenig_color(G) if method == "koenig" else shannon_color(G)
    ok, problems = verify_coloring(G, result.sigma, result.coloring)
    if not ok:
        raise AssertionError(f"refusing to emit an invalid coloring: {problems}")
    out.write(dumps(result_to_dict(G, result)))
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(to_dot(G, result.coloring, result.sigma))
    return 0


def _cmd_verify(args, out):
    G = _load(args.graph)
    try:
        with open(args.coloring, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {args.coloring}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{args.coloring} is not JSON: {exc}") from exc
    try:
        col = coloring_from_dict(doc)
        sigma = signature_from_dict(doc)
    except (ColoringError, AttributeError, TypeError, ValueError) as exc:
        raise UsageError(f"{args.coloring} is not a coloring document: {exc}") from exc
    problems = []
    if sigma is None:
        sigma = G.signature()
    elif set(sigma) != set(G.edge_ids):
        problems.append("coloring signature does not cover the graph's edges")
    elif not signatures_equivalent(G, G.signature(), sigma):
        problems.append("coloring signature is not equivalent to the graph's signature")
    if not problems:
        try:
            problems = verify_coloring(G, sigma, col)[1]
        except ColoringError as exc:
            problems = [str(exc)]
    out.write(dumps({"valid": not problems, "violations": problems}))
    return 0 if not problems else 1


def _cmd_chi(args, out):
    G = _load(args.graph)
    report = chromatic_index(G, max_edges=args.max_edges, max_vertices=args.max_vertices)
    doc = report.as_dict()
    if report.witness is not None:
        doc["witness"] = coloring_to_dict(G, report.witness)
    out.write(dumps(doc))
    return 0


def _cmd_layers(args, out):
    G = _load(args.graph)
    for layer in decompose_layers(G):
        out.write(" ".join(str(eid) for eid in sorted(layer)) + "\n")
    return 0


def _cmd_balance(args, out):
    G = _load(args.graph)
    ok, witness = is_balanced(G)
    if ok:
        out.write("balanced\n")
        out.write(dumps({"potential": {v: witness.potential[v] for v in G.vertices}}))
    else:
        c = witness.circuit
        out.write("unbalanced\n")
        out.write(dumps({"circuit": {"vertices": list(c.vertices), "edges": list(c.edges)}}))
    return 0


def _cmd_equiv(args, out):
    G1, G2 = _load(args.first), _load(args.second)
    same = G1.vertices == G2.vertices and [(e.u, e.v) for e in G1.edges] == [(e.u, e.v) for e in G2.edges]
    if not same:
        raise SignedColorError("the two files do not describe the same underlying graph")
    eq = signatures_equivalent(G1, G1.signature(), G2.signature())
    out.write("equivalent\n" if eq else "not equivalent\n")
    return 0


def _cmd_resign(args, out):
    G = _load(args.graph)
    if args.at is not None:
        X = [v for v in args.at.split(",") if v]
        unknown = [v for v in X if not G.has_vertex(v)]
        if unknown:
            raise UsageError(f"unknown vertices: {', '.join(unknown)}")
    else:
        rng = random.Random(args.seed)
        X = [v for v in G.vertices if rng.random() < 0.5]
    text = format_graph(G.with_signature(resign(G, None, X)))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="signedcolor", description="Edge-coloring of signed multigraphs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("color", help="color a graph and print the result as JSON")
    c.add_argument("graph")
    c.add_argument("--method", choices=("shannon", "koenig", "auto"), default="auto")
    c.add_argument("--dot", metavar="PATH", help="also write a Graphviz rendering")
    c.set_defaults(func=_cmd_color)

    v = sub.add_parser("verify", help="check a coloring JSON document against a graph")
    v.add_argument("graph")
    v.add_argument("coloring")
    v.set_defaults(func=_cmd_verify)

    x = sub.add_parser("chi", help="exact chromatic index by exhaustive search")
    x.add_argument("graph")
    x.add_argument("--max-edges", type=int, default=MAX_EDGES)
    x.add_argument("--max-vertices", type=int, default=MAX_VERTICES)
    x.set_defaults(func=_cmd_chi)

    lay = sub.add_parser("layers", help="print a layer decomposition, one layer per line")
    lay.add_argument("graph")
    lay.set_defaults(func=_cmd_layers)

    b = sub.add_parser("balance", help="test balance and print a certificate")
    b.add_argument("graph")
    b.set_defaults(func=_cmd_balance)

    e = sub.add_parser("equiv", help="compare the signatures of two copies of a graph")
    e.add_argument("first")
    e.add_argument("second")
    e.set_defaults(func=_cmd_equiv)

    r = sub.add_parser("resign", help="write the graph resigned at a vertex set")
    r.add_argument("graph")
    group = r.add_mutually_exclusive_group(required=True)
    group.add_argument("--at", metavar="V1,V2,...")
    group.add_argument("--random", action="store_true", help="resign at a random vertex set")
    r.add_argument("--seed", type=int, default=None)
    r.add_argument("-o", "--output")
    r.set_defaults(func=_cmd_resign)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, GraphFormatError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    except SignedColorError as exc:
        err.write(f"error: {exc}\n")
        return 1
