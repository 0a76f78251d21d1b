"""Matchings used by the coloring pipelines.

All three operations are one weighted problem: every edge weighs the number
of its ends that lie in a target set (or 1 for plain cardinality), loops
never participate. Optimum values come from networkx's blossom
implementation; among optimal matchings the lexicographically smallest
sorted id tuple is returned, found by deciding edges in id order.
"""
from __future__ import annotations

from typing import Callable, Iterable

import networkx as nx

from .graph import SignedGraph


def is_matching(G: SignedGraph, edge_ids: Iterable[int]) -> bool:
    covered: set[str] = set()
    for eid in edge_ids:
        e = G.edge(eid)
        if e.is_loop or e.u in covered or e.v in covered:
            return False
        covered.update((e.u, e.v))
    return True


def covered_vertices(G: SignedGraph, edge_ids: Iterable[int]) -> set[str]:
    out: set[str] = set()
    for eid in edge_ids:
        e = G.edge(eid)
        out.update((e.u, e.v))
    return out


def _optimum(edges, weight) -> int:
    H = nx.Graph()
    for e in edges:
        w = weight(e)
        if not H.has_edge(e.u, e.v) or H[e.u][e.v]["weight"] < w:
            H.add_edge(e.u, e.v, weight=w)
    if H.number_of_edges() == 0:
        return 0
    chosen = nx.max_weight_matching(H, maxcardinality=False)
    return sum(H[a][b]["weight"] for a, b in chosen)


def _lexmin_optimal(G: SignedGraph, weight: Callable) -> frozenset[int]:
    candidates = [e for e in G.edges if not e.is_loop and weight(e) > 0]
    candidates.sort(key=lambda e: e.id)
    target = _optimum(candidates, weight)
    chosen: list[int] = []
    used: set[str] = set()
    for i, e in enumerate(candidates):
        if target == 0:
            break
        if e.u in used or e.v in used:
            continue
        blocked = used | {e.u, e.v}
        rest = [f for f in candidates[i + 1:] if f.u not in blocked and f.v not in blocked]
        if weight(e) + _optimum(rest, weight) == target:
            chosen.append(e.id)
            used |= {e.u, e.v}
            target -= weight(e)
    return frozenset(chosen)


def maximum_matching(G: SignedGraph) -> frozenset[int]:
    return _lexmin_optimal(G, lambda e: 1)


def matching_max_cover(G: SignedGraph, T: Iterable[str]) -> frozenset[int]:
    """A matching covering as many vertices of ``T`` as possible.

    The ``T``-vertices it leaves uncovered are pairwise non-adjacent; an
    edge between two of them would extend the cover.
    """
    T = set(T)
    unknown = [v for v in T if not G.has_vertex(v)]
    if unknown:
        raise KeyError(f"unknown vertices {sorted(unknown)}")
    return _lexmin_optimal(G, lambda e: (e.u in T) + (e.v in T))


def matching_covering(G: SignedGraph, T: Iterable[str]) -> frozenset[int] | None:
    """A matching covering every vertex of ``T``, or None if there is none."""
    T = set(T)
    M = matching_max_cover(G, T)
    return M if T <= covered_vertices(G, M) else None
