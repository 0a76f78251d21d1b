"""JSON and DOT serialization of colorings and results."""
from __future__ import annotations

import json
from typing import Mapping

from .coloring import Color, HalfEdgeColoring, Palette
from .exceptions import ColoringError
from .graph import NEGATIVE, SignedGraph


def coloring_to_dict(G: SignedGraph, col: HalfEdgeColoring) -> dict:
    return {
        "palette": {"t": col.palette.t, "k": col.palette.k},
        "edges": [
            {"id": eid, "u": G.edge(eid).u, "v": G.edge(eid).v, "halves": [c.token for c in col.pair_of(eid)]}
            for eid in col.edge_ids
        ],
    }


def coloring_from_dict(data: Mapping) -> HalfEdgeColoring:
    try:
        palette = Palette(int(data["palette"]["t"]), int(data["palette"]["k"]))
        col = HalfEdgeColoring(palette)
        for rec in data["edges"]:
            first, second = rec["halves"]
            col.set_edge(int(rec["id"]), Color.parse(first), Color.parse(second))
    except (KeyError, TypeError, ValueError) as exc:
        raise ColoringError(f"malformed coloring document: {exc}") from exc
    return col


def result_to_dict(G: SignedGraph, result) -> dict:
    doc = coloring_to_dict(G, result.coloring)
    doc.update(
        {
            "method": result.method,
            "colors": result.colors,
            "trace": list(result.trace),
            "resigned_at": sorted(result.resigned_at, key=G.order),
            "signature": {str(eid): result.sigma[eid] for eid in G.edge_ids},
        }
    )
    return doc


def signature_from_dict(data: Mapping) -> dict[int, int] | None:
    sig = data.get("signature")
    if sig is None:
        return None
    return {int(k): int(v) for k, v in sig.items()}


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def to_dot(G: SignedGraph, col: HalfEdgeColoring | None = None, sigma: Mapping[int, int] | None = None) -> str:
    """Graphviz text; negative edges are dashed, labels show the half colors."""
    sigma = G.signature() if sigma is None else sigma
    lines = ["graph G {"]
    for v in G.vertices:
        lines.append(f'  "{v}";')
    for e in G.edges:
        attrs = []
        if sigma[e.id] == NEGATIVE:
            attrs.append("style=dashed")
        if col is not None and (e.id, 0) in col.halves:
            a, b = col.pair_of(e.id)
            attrs.append(f'label="{e.id}: {a.token} / {b.token}"')
        else:
            attrs.append(f'label="{e.id}"')
        lines.append(f'  "{e.u}" -- "{e.v}" [{", ".join(attrs)}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
