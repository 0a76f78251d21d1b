"""Symmetric color sets and half-edge colorings of signed graphs.

A coloring is stored per half-edge. For an edge with half colors ``(a, b)``
edge consistency requires ``b == -a`` on a positive edge and ``b == a`` on a
negative edge; properness requires distinct half colors around every vertex.
This is the bidirection-free form of an edge coloring: the half color is the
edge color multiplied by the bidirection value of that half-edge.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple

from .exceptions import ColoringError, NegativeLoopError
from .graph import NEGATIVE, POSITIVE, HalfEdge, SignedGraph, Trail, trails


class Color(NamedTuple):
    """``sign == 0`` is the self-inverse color 0_index; otherwise +/-s_index."""

    index: int
    sign: int

    @property
    def is_self_inverse(self) -> bool:
        return self.sign == 0

    def __neg__(self) -> "Color":
        return Color(self.index, -self.sign)

    @property
    def token(self) -> str:
        if self.sign == 0:
            return f"0_{self.index}"
        return f"{'+' if self.sign > 0 else '-'}s_{self.index}"

    def __str__(self) -> str:
        return self.token

    @classmethod
    def parse(cls, token: str) -> "Color":
        m = re.fullmatch(r"0_(\d+)|([+-])s_(\d+)", token)
        if not m:
            raise ColoringError(f"bad color token {token!r}")
        if m.group(1):
            return cls(int(m.group(1)), 0)
        return cls(int(m.group(3)), 1 if m.group(2) == "+" else -1)


def zero(i: int) -> Color:
    return Color(i, 0)


def pair(i: int, sign: int = 1) -> Color:
    return Color(i, sign)


@dataclass(frozen=True)
class Palette:
    """The symmetric set with ``t`` self-inverse colors and ``k`` inverse pairs."""

    t: int
    k: int

    @property
    def size(self) -> int:
        return self.t + 2 * self.k

    def colors(self) -> list[Color]:
        return [zero(i) for i in range(1, self.t + 1)] + [
            Color(i, s) for i in range(1, self.k + 1) for s in (1, -1)
        ]

    def __contains__(self, c: Color) -> bool:
        if c.sign == 0:
            return 1 <= c.index <= self.t
        return c.sign in (1, -1) and 1 <= c.index <= self.k

    def __str__(self) -> str:
        return f"S^{self.t}_{2 * self.k}"


@dataclass
class HalfEdgeColoring:
    palette: Palette
    halves: dict[HalfEdge, Color] = field(default_factory=dict)

    @property
    def edge_ids(self) -> list[int]:
        return sorted({h.edge for h in self.halves})

    def pair_of(self, eid: int) -> tuple[Color, Color]:
        return self.halves[HalfEdge(eid, 0)], self.halves[HalfEdge(eid, 1)]

    def set_edge(self, eid: int, first: Color, second: Color) -> None:
        self.halves[HalfEdge(eid, 0)] = first
        self.halves[HalfEdge(eid, 1)] = second

    def edge_class(self, eid: int) -> tuple[int, bool]:
        """``(index, self_inverse)`` of the color class containing ``eid``."""
        c = self.halves[HalfEdge(eid, 0)]
        return c.index, c.is_self_inverse

    def color_class(self, index: int, self_inverse: bool) -> set[int]:
        return {eid for eid in self.edge_ids if self.edge_class(eid) == (index, self_inverse)}

    def at(self, G: SignedGraph, v: str) -> list[Color]:
        return [self.halves[h] for h in G.half_edges(v) if h in self.halves]

    def copy(self) -> "HalfEdgeColoring":
        return HalfEdgeColoring(self.palette, dict(self.halves))


def partner(color: Color, sign: int) -> Color:
    """Half color forced at the far end of an edge of the given sign."""
    return -color if sign == POSITIVE else color


def verify_coloring(
    G: SignedGraph, sigma: Mapping[int, int] | None, col: HalfEdgeColoring
) -> tuple[bool, list[str]]:
    """Check edge consistency and properness; return ``(ok, violations)``.

    Raises ColoringError for a color outside the palette.
    """
    sigma = G.signature() if sigma is None else sigma
    violations = []
    for h, c in col.halves.items():
        if c not in col.palette:
            raise ColoringError(f"color {c} of half-edge {tuple(h)} is outside {col.palette}")
        if not G.has_edge(h.edge):
            violations.append(f"half-edge {tuple(h)} belongs to no edge of the graph")
    for e in G.edges:
        a = col.halves.get(HalfEdge(e.id, 0))
        b = col.halves.get(HalfEdge(e.id, 1))
        if a is None or b is None:
            violations.append(f"edge {e.id} is not fully colored")
            continue
        if b != partner(a, sigma[e.id]):
            kind = "positive" if sigma[e.id] == POSITIVE else "negative"
            violations.append(f"edge {e.id} ({kind}) has inconsistent half colors {a}, {b}")
    for v in G.vertices:
        seen: dict[Color, int] = {}
        for h in G.half_edges(v):
            c = col.halves.get(h)
            if c is None:
                continue
            if c in seen:
                violations.append(f"vertex {v}: color {c} on edges {seen[c]} and {h.edge}")
            else:
                seen[c] = h.edge
    return not violations, violations


def _color_trail(G: SignedGraph, sigma: Mapping[int, int], trail: Trail, index: int, halves: dict) -> None:
    """Color a path or positive circuit with +/-s_index by forced propagation."""
    current = pair(index, 1)
    for i, eid in enumerate(trail.edges):
        e = G.edge(eid)
        x = trail.vertices[i]
        slot = 0 if e.is_loop else e.slot_at(x)
        far = partner(current, sigma[eid])
        halves[HalfEdge(eid, slot)] = current
        halves[HalfEdge(eid, 1 - slot)] = far
        # next edge leaves the shared vertex with a color different from `far`
        current = -far
    if trail.closed:
        first = halves[HalfEdge(trail.edges[0], 0 if G.edge(trail.edges[0]).is_loop else G.edge(trail.edges[0]).slot_at(trail.vertices[0]))]
        last_e = G.edge(trail.edges[-1])
        last_slot = 1 if last_e.is_loop else last_e.slot_at(trail.vertices[-1])
        if halves[HalfEdge(last_e.id, last_slot)] == first:
            raise AssertionError("closing a negative circuit with one pair color")


def _sign_product(sigma, edges) -> int:
    s = 1
    for eid in edges:
        s *= sigma[eid]
    return s


def _single_trail(G: SignedGraph, edge_ids) -> Trail:
    parts = trails(G, edge_ids)
    if len(parts) != 1:
        raise ColoringError(f"edge set forms {len(parts)} components, expected one")
    return parts[0]


def color_path(G: SignedGraph, sigma: Mapping[int, int] | None, path_edges: Iterable[int]) -> HalfEdgeColoring:
    """S^0_2-coloring of a signed path."""
    sigma = G.signature() if sigma is None else sigma
    path_edges = list(path_edges)
    try:
        trail = _single_trail(G, path_edges)
    except ValueError as exc:
        raise ColoringError("edge set is not a path") from exc
    if trail.closed:
        raise ColoringError("edge set is a circuit, not a path")
    col = HalfEdgeColoring(Palette(0, 1))
    _color_trail(G, sigma, trail, 1, col.halves)
    return col


def _rotate_to_end(trail: Trail, eid: int) -> Trail:
    """Rotate a closed trail so that ``eid`` is its last edge."""
    i = trail.edges.index(eid)
    edges = trail.edges[i + 1:] + trail.edges[: i + 1]
    verts = trail.vertices[:-1]
    verts = verts[i + 1:] + verts[: i + 1]
    return Trail(verts + (verts[0],), edges, True)


def _color_negative_circuit(G, sigma, trail: Trail, index: int, zero_index: int, halves: dict) -> int:
    """Color ``trail`` minus its lowest-id negative edge with +/-s_index and
    that edge with 0_zero_index; returns the zero-colored edge."""
    if len(trail.edges) == 1:
        raise NegativeLoopError(f"negative loop {trail.edges[0]} has no coloring")
    zero_edge = min(eid for eid in trail.edges if sigma[eid] == NEGATIVE)
    rotated = _rotate_to_end(trail, zero_edge)
    path = Trail(rotated.vertices[:-1], rotated.edges[:-1], False)
    _color_trail(G, sigma, path, index, halves)
    halves[HalfEdge(zero_edge, 0)] = zero(zero_index)
    halves[HalfEdge(zero_edge, 1)] = zero(zero_index)
    return zero_edge


def color_circuit(G: SignedGraph, sigma: Mapping[int, int] | None, circuit_edges: Iterable[int]) -> HalfEdgeColoring:
    """S^0_2-coloring of a positive circuit, S^1_2-coloring of a negative one.

    On a negative circuit exactly one edge, its lowest-id negative edge, gets
    the self-inverse color.
    """
    sigma = G.signature() if sigma is None else sigma
    trail = _single_trail(G, circuit_edges)
    if not trail.closed:
        raise ColoringError("edge set is a path, not a circuit")
    if _sign_product(sigma, trail.edges) == POSITIVE:
        col = HalfEdgeColoring(Palette(0, 1))
        _color_trail(G, sigma, trail, 1, col.halves)
    else:
        col = HalfEdgeColoring(Palette(1, 1))
        _color_negative_circuit(G, sigma, trail, 1, 1, col.halves)
    return col


def color_layer(G: SignedGraph, sigma: Mapping[int, int] | None, layer: Iterable[int]) -> HalfEdgeColoring:
    """S^1_2-coloring of a layer.

    Paths and positive circuits use only +/-s_1; each negative circuit has
    exactly one edge colored 0_1, and that edge is negative.
    """
    sigma = G.signature() if sigma is None else sigma
    col = HalfEdgeColoring(Palette(1, 1))
    for trail in trails(G, layer):
        if trail.closed and _sign_product(sigma, trail.edges) == NEGATIVE:
            _color_negative_circuit(G, sigma, trail, 1, 1, col.halves)
        else:
            _color_trail(G, sigma, trail, 1, col.halves)
    return col


def class_components(G: SignedGraph, edges: Iterable[int]) -> list[set[int]]:
    """Connected components (as edge sets) of the subgraph on ``edges``."""
    edges = set(edges)
    parent: dict[str, str] = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for eid in edges:
        e = G.edge(eid)
        parent.setdefault(e.u, e.u)
        parent.setdefault(e.v, e.v)
        a, b = find(e.u), find(e.v)
        if a != b:
            parent[a] = b
    groups: dict[str, set[int]] = {}
    for eid in sorted(edges):
        groups.setdefault(find(G.edge(eid).u), set()).add(eid)
    return list(groups.values())


def kempe_resign(G: SignedGraph, col: HalfEdgeColoring, D: Iterable[int]) -> HalfEdgeColoring:
    """Negate every half color on ``D``, a component of one color class."""
    D = set(D)
    if not D:
        raise ColoringError("empty component")
    classes = {col.edge_class(eid) for eid in D}
    if len(classes) != 1:
        raise ColoringError("edges of D lie in different color classes")
    index, self_inverse = classes.pop()
    if D not in class_components(G, col.color_class(index, self_inverse)):
        raise ColoringError("D is not a connected component of its color class")
    out = col.copy()
    for eid in D:
        a, b = col.pair_of(eid)
        out.set_edge(eid, -a, -b)
    return out


def missing_colors(G: SignedGraph, col: HalfEdgeColoring, v: str) -> set[Color]:
    return set(col.palette.colors()) - set(col.at(G, v))


def combine_colorings(parts: Iterable[HalfEdgeColoring]) -> HalfEdgeColoring:
    """Union of colorings of edge-disjoint subgraphs over concatenated palettes.

    Part ``j`` keeps its colors shifted past the self-inverse and pair indices
    of parts ``0..j-1``.
    """
    t_off = k_off = 0
    halves: dict[HalfEdge, Color] = {}
    seen_edges: set[int] = set()
    for part in parts:
        edges = set(part.edge_ids)
        overlap = seen_edges & edges
        if overlap:
            raise ColoringError(f"parts overlap on edges {sorted(overlap)}")
        seen_edges |= edges
        for h, c in part.halves.items():
            halves[h] = Color(c.index + (t_off if c.sign == 0 else k_off), c.sign)
        t_off += part.palette.t
        k_off += part.palette.k
    return HalfEdgeColoring(Palette(t_off, k_off), halves)


def pair_self_inverse_classes(
    G: SignedGraph, sigma: Mapping[int, int] | None, col: HalfEdgeColoring
) -> HalfEdgeColoring:
    """Merge self-inverse classes two at a time into fresh inverse pairs.

    Classes 0_1 and 0_2 become the pair k+1, 0_3 and 0_4 the pair k+2, and so
    on; with t odd the class 0_t survives as 0_1. Every self-inverse colored
    edge must be negative, so each merged class is a union of two matchings
    of negative edges and all of its circuits are positive.
    """
    sigma = G.signature() if sigma is None else sigma
    t, k = col.palette.t, col.palette.k
    for eid in col.edge_ids:
        index, self_inverse = col.edge_class(eid)
        if self_inverse and sigma[eid] != NEGATIVE:
            raise ColoringError(f"self-inverse color 0_{index} sits on positive edge {eid}")
    out = HalfEdgeColoring(Palette(t % 2, k + t // 2))
    for h, c in col.halves.items():
        if not c.is_self_inverse:
            out.halves[h] = c
        elif c.index == t and t % 2 == 1:
            out.halves[h] = zero(1)
    for j in range(t // 2):
        merged = col.color_class(2 * j + 1, True) | col.color_class(2 * j + 2, True)
        for trail in trails(G, merged):
            if trail.closed and _sign_product(sigma, trail.edges) != POSITIVE:
                raise AssertionError("union of two negative matchings has a negative circuit")
            _color_trail(G, sigma, trail, k + j + 1, out.halves)
    return out


def structure_violations(G: SignedGraph, sigma: Mapping[int, int] | None, col: HalfEdgeColoring) -> list[str]:
    """Class-structure checks for a valid coloring.

    Self-inverse classes must be matchings of negative edges; each pair class
    must induce paths and positive circuits.
    """
    sigma = G.signature() if sigma is None else sigma
    problems = []
    for i in range(1, col.palette.t + 1):
        cls = col.color_class(i, True)
        deg: dict[str, int] = {}
        for eid in cls:
            e = G.edge(eid)
            if sigma[eid] != NEGATIVE:
                problems.append(f"0_{i} colors positive edge {eid}")
            for x in (e.u, e.v):
                deg[x] = deg.get(x, 0) + 1
        if any(d > 1 for d in deg.values()):
            problems.append(f"class 0_{i} is not a matching")
    for i in range(1, col.palette.k + 1):
        cls = col.color_class(i, False)
        try:
            parts = trails(G, cls)
        except ValueError:
            problems.append(f"class +/-s_{i} has a vertex of degree above 2")
            continue
        for trail in parts:
            if trail.closed and _sign_product(sigma, trail.edges) != POSITIVE:
                problems.append(f"class +/-s_{i} contains a negative circuit {trail.edges}")
    return problems
