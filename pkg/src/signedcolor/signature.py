"""Resigning, balance, antibalance and signature equivalence."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping

from .graph import NEGATIVE, POSITIVE, Circuit, SignedGraph


@dataclass(frozen=True)
class BalanceWitness:
    """Certificate for ``is_balanced``.

    Exactly one field is set: ``potential`` maps every vertex to +1/-1 with
    ``sigma(uv) == potential[u] * potential[v]`` on every edge when balanced;
    ``circuit`` is a negative circuit otherwise.
    """

    potential: dict[str, int] | None = None
    circuit: Circuit | None = None


def _sigma(G: SignedGraph, sigma: Mapping[int, int] | None) -> Mapping[int, int]:
    return G.signature() if sigma is None else sigma


def resign(G: SignedGraph, sigma: Mapping[int, int] | None, X: Iterable[str]) -> dict[int, int]:
    """Flip the sign of every edge with exactly one end in ``X``.

    Loops never change sign.
    """
    sigma = _sigma(G, sigma)
    X = set(X)
    unknown = [v for v in X if not G.has_vertex(v)]
    if unknown:
        raise KeyError(f"unknown vertices {sorted(unknown)}")
    out = {}
    for e in G.edges:
        flip = (e.u in X) != (e.v in X)
        out[e.id] = -sigma[e.id] if flip else sigma[e.id]
    return out


def _tree_path(parent, depth, a, b):
    """Vertices and edges of the forest path from ``a`` to ``b``."""
    left, right = [a], [b]
    left_edges, right_edges = [], []
    while depth[a] > depth[b]:
        left_edges.append(parent[a][1])
        a = parent[a][0]
        left.append(a)
    while depth[b] > depth[a]:
        right_edges.append(parent[b][1])
        b = parent[b][0]
        right.append(b)
    while a != b:
        left_edges.append(parent[a][1])
        a = parent[a][0]
        left.append(a)
        right_edges.append(parent[b][1])
        b = parent[b][0]
        right.append(b)
    verts = left + right[-2::-1]
    edges = left_edges + right_edges[::-1]
    return verts, edges


def is_balanced(G: SignedGraph, sigma: Mapping[int, int] | None = None) -> tuple[bool, BalanceWitness]:
    sigma = _sigma(G, sigma)
    for e in G.edges:
        if e.is_loop and sigma[e.id] == NEGATIVE:
            return False, BalanceWitness(circuit=Circuit((e.u,), (e.id,)))

    potential: dict[str, int] = {}
    parent: dict[str, tuple[str, int] | None] = {}
    depth: dict[str, int] = {}
    tree_edges: set[int] = set()
    for root in G.vertices:
        if root in potential:
            continue
        potential[root] = POSITIVE
        parent[root] = None
        depth[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for h in sorted(G.half_edges(v)):
                e = G.edge(h.edge)
                if e.is_loop:
                    continue
                w = e.other(v)
                if w not in potential:
                    potential[w] = potential[v] * sigma[e.id]
                    parent[w] = (v, e.id)
                    depth[w] = depth[v] + 1
                    tree_edges.add(e.id)
                    queue.append(w)

    for e in G.edges:
        if e.is_loop or e.id in tree_edges:
            continue
        if potential[e.u] * potential[e.v] != sigma[e.id]:
            verts, edges = _tree_path(parent, depth, e.v, e.u)
            # closed walk: u --e--> v --tree path--> u
            circuit = Circuit((e.u, *verts[:-1]), (e.id, *edges))
            return False, BalanceWitness(circuit=circuit)
    return True, BalanceWitness(potential=potential)


def is_antibalanced(G: SignedGraph, sigma: Mapping[int, int] | None = None) -> bool:
    sigma = _sigma(G, sigma)
    return is_balanced(G, {eid: -s for eid, s in sigma.items()})[0]


def signatures_equivalent(G: SignedGraph, sigma1: Mapping[int, int], sigma2: Mapping[int, int]) -> bool:
    """Whether ``sigma1`` and ``sigma2`` differ by a resigning."""
    product = {e.id: sigma1[e.id] * sigma2[e.id] for e in G.edges}
    return is_balanced(G, product)[0]


def resigning_set(G: SignedGraph, sigma1: Mapping[int, int], sigma2: Mapping[int, int]) -> frozenset[str] | None:
    """A vertex set ``X`` with ``resign(sigma1, X) == sigma2``, or None."""
    product = {e.id: sigma1[e.id] * sigma2[e.id] for e in G.edges}
    ok, witness = is_balanced(G, product)
    if not ok:
        return None
    return frozenset(v for v, p in witness.potential.items() if p == NEGATIVE)


def forest_resigning(G: SignedGraph, sigma: Mapping[int, int] | None, S: Iterable[int]) -> frozenset[str]:
    """Vertex set whose resigning makes every edge of the forest ``G[S]`` negative.

    Each tree is 2-colored from its earliest vertex; of the two complementary
    flip sets of a tree the smaller one is taken, ties going to the one that
    contains the root.
    """
    sigma = _sigma(G, sigma)
    S = sorted(set(S))
    adj: dict[str, list[tuple[str, int]]] = {}
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for eid in S:
        e = G.edge(eid)
        if e.is_loop:
            raise ValueError(f"edge set contains the loop {eid}; it is not a forest")
        for x in (e.u, e.v):
            parent.setdefault(x, x)
        ru, rv = find(e.u), find(e.v)
        if ru == rv:
            raise ValueError(f"edge set contains a circuit through edge {eid}; it is not a forest")
        parent[ru] = rv
        adj.setdefault(e.u, []).append((e.v, eid))
        adj.setdefault(e.v, []).append((e.u, eid))

    flips: set[str] = set()
    seen: set[str] = set()
    for root in sorted(adj, key=G.order):
        if root in seen:
            continue
        side = {root: 1}
        seen.add(root)
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w, eid in adj[v]:
                if w in seen:
                    continue
                seen.add(w)
                # after resigning, sigma * (-1)^(side u + side w) must be -1
                side[w] = side[v] if sigma[eid] == NEGATIVE else 1 - side[v]
                queue.append(w)
        with_root = {v for v, s in side.items() if s == 1}
        without_root = set(side) - with_root
        flips |= with_root if len(with_root) <= len(without_root) else without_root
    return frozenset(flips)


def make_edges_negative(G: SignedGraph, sigma: Mapping[int, int] | None, S: Iterable[int]) -> dict[int, int]:
    """An equivalent signature in which every edge of the forest ``G[S]`` is negative."""
    X = forest_resigning(G, sigma, S)
    return resign(G, sigma, X)
