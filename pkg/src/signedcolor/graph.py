"""Signed multigraphs, half-edges, degrees and circuits.

Vertex ids are opaque strings. Edge ids are integers that survive subgraph
extraction, so an edge keeps its id in every layer, matching and coloring
derived from the host graph. Loops and parallel edges are allowed.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple

from .exceptions import GraphFormatError, InstanceTooLargeError

POSITIVE = 1
NEGATIVE = -1

_SIGN_TOKENS = {"+": POSITIVE, "-": NEGATIVE}


class HalfEdge(NamedTuple):
    """One end of an edge; ``slot`` 0 sits at ``edge.u`` and 1 at ``edge.v``."""

    edge: int
    slot: int


@dataclass(frozen=True)
class Edge:
    id: int
    u: str
    v: str
    sign: int

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def end(self, slot: int) -> str:
        return self.u if slot == 0 else self.v

    def halves(self) -> tuple[HalfEdge, HalfEdge]:
        return HalfEdge(self.id, 0), HalfEdge(self.id, 1)

    def slot_at(self, vertex: str) -> int:
        """Slot of the half-edge at ``vertex`` (slot 0 for a loop)."""
        if vertex == self.u:
            return 0
        if vertex == self.v:
            return 1
        raise KeyError(f"vertex {vertex!r} is not an end of edge {self.id}")

    def other(self, vertex: str) -> str:
        return self.v if vertex == self.u else self.u


@dataclass(frozen=True)
class Circuit:
    """A closed walk ``vertices[i] --edges[i]--> vertices[i+1]`` (indices mod n)."""

    vertices: tuple[str, ...]
    edges: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Trail:
    """A component of a subgraph with maximum degree at most 2.

    ``vertices`` has one more entry than ``edges``; for a closed trail the
    first and last vertex coincide.
    """

    vertices: tuple[str, ...]
    edges: tuple[int, ...]
    closed: bool

    def as_circuit(self) -> Circuit:
        if not self.closed:
            raise ValueError("an open trail is not a circuit")
        return Circuit(self.vertices[:-1], self.edges)


class SignedGraph:
    """Immutable signed multigraph.

    ``vertices`` keeps declaration order, which the deterministic algorithms
    use as the vertex order for tie-breaking.
    """

    __slots__ = ("vertices", "edges", "_by_id", "_halves", "_order")

    def __init__(self, vertices: Iterable[str], edges: Iterable[Edge]):
        vertex_list: list[str] = []
        seen: set[str] = set()
        for v in vertices:
            if v not in seen:
                seen.add(v)
                vertex_list.append(v)
        edge_list = list(edges)
        by_id: dict[int, Edge] = {}
        for e in edge_list:
            if e.id in by_id:
                raise ValueError(f"duplicate edge id {e.id}")
            if e.sign not in (POSITIVE, NEGATIVE):
                raise ValueError(f"edge {e.id} has sign {e.sign!r}; expected +1 or -1")
            for end in (e.u, e.v):
                if end not in seen:
                    raise ValueError(f"edge {e.id} references unknown vertex {end!r}")
            by_id[e.id] = e
        halves: dict[str, list[HalfEdge]] = {v: [] for v in vertex_list}
        for e in edge_list:
            halves[e.u].append(HalfEdge(e.id, 0))
            halves[e.v].append(HalfEdge(e.id, 1))
        self.vertices = tuple(vertex_list)
        self.edges = tuple(edge_list)
        self._by_id = by_id
        self._halves = {v: tuple(hs) for v, hs in halves.items()}
        self._order = {v: i for i, v in enumerate(vertex_list)}

    @classmethod
    def from_edges(cls, edges, vertices=()) -> "SignedGraph":
        """Build from ``(u, v, sign)`` triples; ids are assigned ``0..m-1``."""
        edge_objs = [Edge(i, str(u), str(v), int(s)) for i, (u, v, s) in enumerate(edges)]
        vs = [str(v) for v in vertices]
        for e in edge_objs:
            vs.extend((e.u, e.v))
        return cls(vs, edge_objs)

    def __repr__(self) -> str:
        return f"SignedGraph(|V|={len(self.vertices)}, |E|={len(self.edges)})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(e.id for e in self.edges)

    def edge(self, eid: int) -> Edge:
        return self._by_id[eid]

    def has_edge(self, eid: int) -> bool:
        return eid in self._by_id

    def has_vertex(self, v: str) -> bool:
        return v in self._order

    def order(self, v: str) -> int:
        """Position of ``v`` in declaration order."""
        return self._order[v]

    def vertex_of(self, h: HalfEdge) -> str:
        return self._by_id[h.edge].end(h.slot)

    def half_edges(self, v: str) -> tuple[HalfEdge, ...]:
        return self._halves[v]

    def degree(self, v: str) -> int:
        return len(self._halves[v])

    def signature(self) -> dict[int, int]:
        return {e.id: e.sign for e in self.edges}

    def negative_edges(self) -> frozenset[int]:
        return frozenset(e.id for e in self.edges if e.sign == NEGATIVE)

    def with_signature(self, sigma: Mapping[int, int]) -> "SignedGraph":
        missing = set(self._by_id) - set(sigma)
        if missing:
            raise ValueError(f"signature is not total; missing edges {sorted(missing)}")
        return SignedGraph(self.vertices, (Edge(e.id, e.u, e.v, int(sigma[e.id])) for e in self.edges))

    def subgraph(self, edge_ids: Iterable[int]) -> "SignedGraph":
        """Spanning subgraph on the given edges; ids are preserved."""
        keep = set(edge_ids)
        unknown = keep - set(self._by_id)
        if unknown:
            raise KeyError(f"unknown edge ids {sorted(unknown)}")
        return SignedGraph(self.vertices, (e for e in self.edges if e.id in keep))

    def without(self, edge_ids: Iterable[int]) -> "SignedGraph":
        drop = set(edge_ids)
        return SignedGraph(self.vertices, (e for e in self.edges if e.id not in drop))

    def neighbors(self, v: str) -> set[str]:
        """Vertices joined to ``v`` by a non-loop edge."""
        out = set()
        for h in self._halves[v]:
            e = self._by_id[h.edge]
            if not e.is_loop:
                out.add(e.other(v))
        return out


def build_graph(text: str) -> SignedGraph:
    """Parse the ``.sg`` edge-list format.

    Lines are ``# comment``, ``v <id>`` or ``e <u> <v> <+|->``. Vertices are
    declared implicitly on first use and edge ids follow record order.
    """
    vertices: list[str] = []
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        kind = fields[0]
        if kind == "v":
            if len(fields) != 2:
                raise GraphFormatError(f"vertex record needs exactly one id: {raw!r}", lineno)
            vertices.append(fields[1])
        elif kind == "e":
            if len(fields) != 4:
                raise GraphFormatError(f"edge record needs 'e <u> <v> <+|->': {raw!r}", lineno)
            _, u, v, token = fields
            if token not in _SIGN_TOKENS:
                raise GraphFormatError(f"unknown sign token {token!r}", lineno)
            vertices.extend((u, v))
            edges.append(Edge(len(edges), u, v, _SIGN_TOKENS[token]))
        else:
            raise GraphFormatError(f"unknown record type {kind!r}", lineno)
    return SignedGraph(vertices, edges)


def format_graph(G: SignedGraph) -> str:
    """Serialize ``G`` to ``.sg`` text. Edge ids must be ``0..m-1`` in order."""
    if list(G.edge_ids) != list(range(len(G.edges))):
        raise ValueError("edge ids must be consecutive from 0 to serialize")
    lines = [f"v {v}" for v in G.vertices]
    lines += [f"e {e.u} {e.v} {'+' if e.sign == POSITIVE else '-'}" for e in G.edges]
    return "\n".join(lines) + "\n"


def degree_stats(G: SignedGraph) -> tuple[dict[str, int], int, frozenset[str]]:
    """Return the degree map, the maximum degree and the max-degree vertices.

    A loop contributes 2 to its vertex. An edgeless graph has maximum degree 0
    and every vertex attains it.
    """
    degrees = {v: G.degree(v) for v in G.vertices}
    delta = max(degrees.values(), default=0)
    return degrees, delta, frozenset(v for v, d in degrees.items() if d == delta)


def max_degree(G: SignedGraph) -> int:
    return max((G.degree(v) for v in G.vertices), default=0)


def _walk(G: SignedGraph, start: str, first: int, available: set[int]) -> tuple[list[str], list[int]]:
    verts = [start]
    edges = []
    current, eid = start, first
    while eid is not None:
        available.discard(eid)
        e = G.edge(eid)
        nxt = e.other(current)
        edges.append(eid)
        verts.append(nxt)
        current = nxt
        eid = None
        for h in G.half_edges(current):
            if h.edge in available:
                eid = h.edge
                break
    return verts, edges


def trails(G: SignedGraph, edge_ids: Iterable[int] | None = None) -> list[Trail]:
    """Split a subgraph of maximum degree at most 2 into paths and circuits.

    Paths start at their endpoint earliest in vertex order; circuits start at
    their earliest vertex and leave it along the lower edge id.
    """
    ids = set(G.edge_ids if edge_ids is None else edge_ids)
    deg: dict[str, int] = {}
    for eid in ids:
        e = G.edge(eid)
        deg[e.u] = deg.get(e.u, 0) + 1
        deg[e.v] = deg.get(e.v, 0) + 1
    if any(d > 2 for d in deg.values()):
        raise ValueError("subgraph has a vertex of degree greater than 2")

    def incident(v):
        return sorted({h.edge for h in G.half_edges(v) if h.edge in available})

    available = set(ids)
    out: list[Trail] = []
    for v in sorted(deg, key=G.order):
        if deg[v] == 1 and incident(v):
            verts, edges = _walk(G, v, incident(v)[0], available)
            out.append(Trail(tuple(verts), tuple(edges), False))
    for v in sorted(deg, key=G.order):
        inc = incident(v)
        if inc:
            verts, edges = _walk(G, v, inc[0], available)
            out.append(Trail(tuple(verts), tuple(edges), True))
    return out


def is_circuit_edge_set(G: SignedGraph, edge_ids: Iterable[int]) -> bool:
    ids = list(edge_ids)
    if not ids:
        return False
    deg: dict[str, int] = {}
    for eid in ids:
        e = G.edge(eid)
        deg[e.u] = deg.get(e.u, 0) + 1
        deg[e.v] = deg.get(e.v, 0) + 1
    if any(d != 2 for d in deg.values()):
        return False
    return len(trails(G, ids)) == 1


def enumerate_circuits(G: SignedGraph, max_edges: int = 16) -> list[Circuit]:
    """Every circuit of ``G`` exactly once, loops and digons included.

    Exhaustive over edge subsets, so it refuses graphs above ``max_edges``.
    """
    m = len(G.edges)
    if m > max_edges:
        raise InstanceTooLargeError(f"circuit enumeration is limited to {max_edges} edges, got {m}")
    ids = G.edge_ids
    ends = [(G.order(e.u), G.order(e.v)) for e in G.edges]
    n = len(G.vertices)
    found = []
    for mask in range(1, 1 << m):
        deg = [0] * n
        ok = True
        for i in range(m):
            if mask >> i & 1:
                a, b = ends[i]
                deg[a] += 1
                deg[b] += 1
                if deg[a] > 2 or deg[b] > 2:
                    ok = False
                    break
        if not ok or any(d == 1 for d in deg):
            continue
        subset = [ids[i] for i in range(m) if mask >> i & 1]
        parts = trails(G, subset)
        if len(parts) == 1:
            found.append(parts[0].as_circuit())
    return found


def circuit_sign(C: Circuit, G: SignedGraph, sigma: Mapping[int, int] | None = None) -> int:
    """Product of the edge signs along ``C``."""
    sign = 1
    for eid in C.edges:
        if not G.has_edge(eid):
            raise KeyError(f"circuit uses edge {eid} which is not in the graph")
        sign *= sigma[eid] if sigma is not None else G.edge(eid).sign
    return sign
