"""Decomposition of a multigraph into ceil(Delta/2) layers.

A layer is a spanning subgraph of maximum degree at most 2. The construction
pairs up odd vertices with dummy edges, orients the resulting even graph
along closed trails (in-degree equals out-degree everywhere), splits every
vertex into an out-copy and an in-copy, and properly edge-colors that
bipartite multigraph with alternating-path swaps. Each color class, with the
dummy edges dropped, touches every vertex at most once as tail and once as
head, so it is a layer.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import POSITIVE, Edge, SignedGraph, max_degree, trails


@dataclass(frozen=True)
class LayerDecomposition:
    graph: SignedGraph
    layers: tuple[frozenset[int], ...]

    def __len__(self) -> int:
        return len(self.layers)

    def __iter__(self):
        return iter(self.layers)

    def __getitem__(self, i: int) -> frozenset[int]:
        return self.layers[i]


def eulerize(G: SignedGraph) -> tuple[SignedGraph, list[int]]:
    """Add dummy positive edges pairing the odd-degree vertices.

    Odd vertices are paired consecutively in vertex order. Dummy ids continue
    after the largest id of ``G``.
    """
    odd = [v for v in G.vertices if G.degree(v) % 2 == 1]
    next_id = max(G.edge_ids, default=-1) + 1
    dummies = []
    for a, b in zip(odd[0::2], odd[1::2]):
        dummies.append(Edge(next_id, a, b, POSITIVE))
        next_id += 1
    augmented = SignedGraph(G.vertices, list(G.edges) + dummies)
    return augmented, [e.id for e in dummies]


def euler_orientation(G: SignedGraph) -> dict[int, tuple[str, str]]:
    """Orient every edge of an even graph so that in- and out-degrees agree.

    Returns ``edge id -> (tail, head)``. Trails start at the earliest vertex
    with unused edges and always leave along the lowest unused edge id.
    """
    unused = {v: sorted(h.edge for h in G.half_edges(v)) for v in G.vertices}
    used: set[int] = set()
    orientation: dict[int, tuple[str, str]] = {}

    def next_edge(v):
        lst = unused[v]
        while lst and lst[0] in used:
            lst.pop(0)
        return lst[0] if lst else None

    for start in G.vertices:
        while next_edge(start) is not None:
            v = start
            eid = next_edge(v)
            while eid is not None:
                used.add(eid)
                w = G.edge(eid).other(v)
                orientation[eid] = (v, w)
                v = w
                eid = next_edge(v)
            if v != start:
                raise ValueError("euler_orientation needs every degree to be even")
    return orientation


def bipartite_edge_coloring(edges: list[tuple[int, object, object]], colors: int) -> dict[int, int]:
    """Proper edge coloring of a bipartite multigraph with ``colors`` colors.

    ``edges`` are ``(id, left, right)`` with left and right nodes from
    disjoint sides; ``colors`` must be at least the maximum degree. Edges are
    processed in the given order; conflicts are resolved by swapping the two
    colors along an alternating path.
    """
    at: dict[object, dict[int, int]] = {}
    ends: dict[int, tuple[object, object]] = {}
    result: dict[int, int] = {}

    def free(node):
        used = at.setdefault(node, {})
        for c in range(colors):
            if c not in used:
                return c
        raise ValueError("bipartite graph has degree above the color budget")

    for eid, a, b in edges:
        alpha = free(a)
        at.setdefault(b, {})
        if alpha in at[b]:
            beta = free(b)
            # alpha/beta alternating path from b; bipartiteness keeps it away from a
            path = []
            node, c = b, alpha
            while c in at.setdefault(node, {}):
                f = at[node][c]
                path.append(f)
                fa, fb = ends[f]
                node = fb if fa == node else fa
                c = beta if c == alpha else alpha
            for f in path:
                for x in ends[f]:
                    del at[x][result[f]]
            for f in path:
                result[f] = beta if result[f] == alpha else alpha
                for x in ends[f]:
                    at[x][result[f]] = f
        result[eid] = alpha
        at[a][alpha] = eid
        at[b][alpha] = eid
        ends[eid] = (a, b)
    return result


def decompose_layers(G: SignedGraph) -> LayerDecomposition:
    """Partition ``E(G)`` into exactly ``ceil(Delta/2)`` layers (none if edgeless)."""
    count = (max_degree(G) + 1) // 2
    if count == 0:
        return LayerDecomposition(G, ())
    augmented, dummies = eulerize(G)
    orientation = euler_orientation(augmented)
    bip = [(eid, ("out", orientation[eid][0]), ("in", orientation[eid][1])) for eid in sorted(orientation)]
    color = bipartite_edge_coloring(bip, count)
    dummy = set(dummies)
    layers = [set() for _ in range(count)]
    for eid, c in color.items():
        if eid not in dummy:
            layers[c].add(eid)
    return LayerDecomposition(G, tuple(frozenset(layer) for layer in layers))


def layer_violations(G: SignedGraph, decomposition: LayerDecomposition) -> list[str]:
    """Partition, degree and count violations of a decomposition (empty if valid)."""
    problems = []
    seen: dict[int, int] = {}
    for i, layer in enumerate(decomposition.layers):
        for eid in layer:
            if eid in seen:
                problems.append(f"edge {eid} in layers {seen[eid]} and {i}")
            seen[eid] = i
        sub = G.subgraph(layer)
        for v in G.vertices:
            if sub.degree(v) > 2:
                problems.append(f"vertex {v} has degree {sub.degree(v)} in layer {i}")
    missing = set(G.edge_ids) - set(seen)
    if missing:
        problems.append(f"edges {sorted(missing)} are in no layer")
    expected = (max_degree(G) + 1) // 2
    if len(decomposition.layers) != expected:
        problems.append(f"{len(decomposition.layers)} layers, expected {expected}")
    return problems


def layer_components(G: SignedGraph, layer) -> list:
    """Paths and circuits of one layer."""
    return trails(G, layer)
