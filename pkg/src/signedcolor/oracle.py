"""Exact chromatic indices of small signed multigraphs by backtracking.

The search assigns every edge a pair of half colors directly, which covers
every bidirection at once: a self-inverse color gives ``(0_i, 0_i)``, a pair
color gives ``(a, -a)`` on a positive edge and ``(a, a)`` on a negative one,
for either choice of ``a`` in ``{s_j, -s_j}``. Interchangeable colors are
only opened in index order, and a freshly opened pair is fixed to start with
``+s_j`` (negating one pair everywhere maps colorings to colorings).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .coloring import Color, HalfEdgeColoring, Palette
from .exceptions import InstanceTooLargeError, NegativeLoopError
from .graph import NEGATIVE, POSITIVE, SignedGraph, max_degree

MAX_EDGES = 16
MAX_VERTICES = 10


@dataclass(frozen=True)
class ChromaticReport:
    chi0: int
    chi1: int
    chi: int
    witness: HalfEdgeColoring | None

    def as_dict(self) -> dict:
        return {"chi0": self.chi0, "chi1": self.chi1, "chi": self.chi}


def _guard(G: SignedGraph, max_edges: int, max_vertices: int) -> None:
    m = len(G.edges)
    n = sum(1 for v in G.vertices if G.degree(v) > 0)
    if m > max_edges or n > max_vertices:
        raise InstanceTooLargeError(
            f"exact search is limited to {max_edges} edges and {max_vertices} vertices; "
            f"got {m} edges on {n} non-isolated vertices"
        )


def has_negative_loop(G: SignedGraph, sigma: Mapping[int, int]) -> bool:
    return any(e.is_loop and sigma[e.id] == NEGATIVE for e in G.edges)


def feasible(
    G: SignedGraph,
    sigma: Mapping[int, int] | None,
    t: int,
    k: int,
    *,
    max_edges: int = MAX_EDGES,
    max_vertices: int = MAX_VERTICES,
) -> tuple[bool, HalfEdgeColoring | None]:
    """Decide whether an S^t_2k-coloring exists; return it when it does."""
    sigma = G.signature() if sigma is None else sigma
    _guard(G, max_edges, max_vertices)
    palette = Palette(t, k)
    if not G.edges:
        return True, HalfEdgeColoring(palette)
    if has_negative_loop(G, sigma) or max_degree(G) > palette.size:
        return False, None
    if k == 0 and any(e.is_loop for e in G.edges):
        return False, None

    vindex = {v: i for i, v in enumerate(G.vertices)}
    order = sorted(G.edges, key=lambda e: (-(G.degree(e.u) + G.degree(e.v)), e.id))
    ends = [(vindex[e.u], vindex[e.v]) for e in order]
    signs = [sigma[e.id] for e in order]
    loops = [e.is_loop for e in order]
    used = [0] * len(G.vertices)
    assignment: list[tuple[int, int]] = [(0, 0)] * len(order)

    # codes: self-inverse i -> i; +s_j -> t + 2j; -s_j -> t + 2j + 1
    def neg(code):
        return code if code < t else t + ((code - t) ^ 1)

    def options(pos, opened_t, opened_k):
        sign, loop = signs[pos], loops[pos]
        if not loop:
            for i in range(min(opened_t + 1, t)):
                yield i, i, max(opened_t, i + 1), opened_k
        for j in range(min(opened_k + 1, k)):
            plus = t + 2 * j
            firsts = (plus,) if j == opened_k else (plus, plus + 1)
            for a in firsts:
                b = neg(a) if sign == POSITIVE else a
                yield a, b, opened_t, max(opened_k, j + 1)

    def search(pos, opened_t, opened_k):
        if pos == len(order):
            return True
        x, y = ends[pos]
        for a, b, nt, nk in options(pos, opened_t, opened_k):
            if x == y:
                if a == b or used[x] >> a & 1 or used[x] >> b & 1:
                    continue
                used[x] |= (1 << a) | (1 << b)
            else:
                if used[x] >> a & 1 or used[y] >> b & 1:
                    continue
                used[x] |= 1 << a
                used[y] |= 1 << b
            assignment[pos] = (a, b)
            if search(pos + 1, nt, nk):
                return True
            used[x] &= ~(1 << a)
            used[y] &= ~(1 << b)
        return False

    if not search(0, 0, 0):
        return False, None

    def decode(code):
        if code < t:
            return Color(code + 1, 0)
        j, minus = divmod(code - t, 2)
        return Color(j + 1, -1 if minus else 1)

    col = HalfEdgeColoring(palette)
    for e, (a, b) in zip(order, assignment):
        # a sits at e.u (slot 0), b at e.v (slot 1)
        col.set_edge(e.id, decode(a), decode(b))
    return True, col


def chromatic_index(
    G: SignedGraph,
    sigma: Mapping[int, int] | None = None,
    *,
    max_edges: int = MAX_EDGES,
    max_vertices: int = MAX_VERTICES,
) -> ChromaticReport:
    """Exact chi'_0, chi'_1 and chi' = min of the two.

    An edgeless graph reports chi = 0.
    """
    sigma = G.signature() if sigma is None else sigma
    _guard(G, max_edges, max_vertices)
    if has_negative_loop(G, sigma):
        raise NegativeLoopError("a signed graph with a negative loop has no coloring")
    if not G.edges:
        return ChromaticReport(0, 1, 0, HalfEdgeColoring(Palette(0, 0)))
    delta = max_degree(G)
    kw = dict(max_edges=max_edges, max_vertices=max_vertices)

    k = max(1, (delta + 1) // 2)
    while True:
        ok, w0 = feasible(G, sigma, 0, k, **kw)
        if ok:
            chi0 = 2 * k
            break
        k += 1
    k = max(0, delta // 2)
    while True:
        ok, w1 = feasible(G, sigma, 1, k, **kw)
        if ok:
            chi1 = 2 * k + 1
            break
        k += 1
    if chi0 <= chi1:
        return ChromaticReport(chi0, chi1, chi0, w0)
    return ChromaticReport(chi0, chi1, chi1, w1)
