"""Constructive colorings within floor(3*Delta/2) and, for balanced graphs, Delta+1.

Both pipelines decompose the graph into layers, color each layer with one
inverse pair plus at most one self-inverse color, and glue the layer
colorings together over disjoint palettes. Odd maximum degree needs a
matching that takes the surplus degree off the maximum-degree vertices; its
edges are made negative by resigning, so they can carry a self-inverse color.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .coloring import (
    HalfEdgeColoring,
    Palette,
    class_components,
    color_layer,
    combine_colorings,
    missing_colors,
    pair_self_inverse_classes,
    verify_coloring,
    zero,
)
from .exceptions import ColoringError, InstanceTooLargeError, NegativeLoopError, NotBalancedError
from .graph import NEGATIVE, SignedGraph, degree_stats, max_degree
from .layers import decompose_layers
from .matching import covered_vertices, matching_covering, matching_max_cover
from .signature import forest_resigning, is_balanced, resign

FALLBACK_MAX_EDGES = 24
FALLBACK_MAX_VERTICES = 16


@dataclass
class ColoringResult:
    """A coloring of ``(G, sigma)`` where ``sigma = resign(original, resigned_at)``."""

    coloring: HalfEdgeColoring
    sigma: dict[int, int]
    resigned_at: frozenset[str]
    method: str
    trace: list[str] = field(default_factory=list)

    @property
    def palette(self) -> Palette:
        return self.coloring.palette

    @property
    def colors(self) -> int:
        return self.coloring.palette.size


class _NoCoveringMatching(Exception):
    """Raised when Hall's condition fails for the max-degree vertices.

    This only happens when some of those vertices carry positive loops.
    """


def chromatic_upper_bound(G: SignedGraph) -> int:
    return 3 * max_degree(G) // 2


def _check_colorable(G: SignedGraph, sigma: Mapping[int, int]) -> None:
    if not G.edges:
        raise ColoringError("the graph has no edges")
    for e in G.edges:
        if e.is_loop and sigma[e.id] == NEGATIVE:
            raise NegativeLoopError(f"edge {e.id} is a negative loop; no coloring exists")


def _is_independent(G: SignedGraph, vertices) -> bool:
    vertices = set(vertices)
    return not any(e.u in vertices and e.v in vertices and not e.is_loop for e in G.edges)


def _empty(palette: Palette) -> HalfEdgeColoring:
    return HalfEdgeColoring(palette)


def _zero_part(edges: Iterable[int]) -> HalfEdgeColoring:
    col = HalfEdgeColoring(Palette(1, 0))
    for eid in edges:
        col.set_edge(eid, zero(1), zero(1))
    return col


def _padded_layers(G: SignedGraph, count: int) -> list[frozenset[int]]:
    layers = list(decompose_layers(G).layers)
    if len(layers) > count:
        raise AssertionError(f"{len(layers)} layers exceed the budget of {count}")
    return layers + [frozenset()] * (count - len(layers))


# ---------------------------------------------------------------- balanced case


def koenig_is_delta(G: SignedGraph) -> tuple[bool, frozenset[int] | None]:
    """Whether a balanced ``G`` is colorable with exactly Delta colors.

    True iff some matching leaves an even maximum degree behind; the witness
    matching is empty for even Delta and covers every max-degree vertex for
    odd Delta.
    """
    if not G.edges:
        raise ColoringError("the graph has no edges")
    _, delta, top = degree_stats(G)
    if delta % 2 == 0:
        return True, frozenset()
    M = matching_covering(G, top)
    return (M is not None), M


def _pair_layer(G: SignedGraph, sigma, layer) -> HalfEdgeColoring:
    col = color_layer(G, sigma, layer)
    if any(c.is_self_inverse for c in col.halves.values()):
        raise AssertionError("a layer of a balanced graph has a negative circuit")
    col.palette = Palette(0, 1)
    return col


def koenig_color(G: SignedGraph, sigma: Mapping[int, int] | None = None) -> ColoringResult:
    """Color a balanced signed graph with Delta colors when possible, else Delta+1."""
    sigma = dict(G.signature() if sigma is None else sigma)
    _check_colorable(G, sigma)
    if not is_balanced(G, sigma)[0]:
        raise NotBalancedError("koenig_color needs a balanced signed graph")
    delta = max_degree(G)
    exact, M = koenig_is_delta(G)
    if delta % 2 == 0:
        parts = [_pair_layer(G, sigma, L) for L in _padded_layers(G, delta // 2)]
        col = combine_colorings(parts)
        X = frozenset()
        trace = [f"Delta={delta} even: {delta // 2} balanced layers, one pair each"]
    elif exact:
        X = forest_resigning(G, sigma, M)
        sigma = resign(G, sigma, X)
        rest = G.without(M)
        parts = [_pair_layer(G, sigma, L) for L in _padded_layers(rest, (delta - 1) // 2)]
        col = combine_colorings([_zero_part(M), *parts])
        trace = [
            f"Delta={delta} odd: matching {sorted(M)} covers all max-degree vertices",
            f"matching made negative and colored 0_1; {(delta - 1) // 2} layers on the rest",
        ]
    else:
        X = frozenset()
        parts = [_pair_layer(G, sigma, L) for L in _padded_layers(G, (delta + 1) // 2)]
        col = combine_colorings(parts)
        trace = [f"Delta={delta} odd and no matching covers the max-degree vertices: {(delta + 1) // 2} layers"]
    result = ColoringResult(col, sigma, X, "koenig", trace)
    _self_check(G, result)
    return result


# ---------------------------------------------------------------- general case


def claim1_color(G: SignedGraph, sigma: Mapping[int, int] | None, t: int) -> HalfEdgeColoring:
    """S^t_2t-coloring of a graph with maximum degree at most 2t.

    Self-inverse colors land only on negative edges, one per negative circuit
    of each layer.
    """
    sigma = G.signature() if sigma is None else sigma
    if max_degree(G) > 2 * t:
        raise ColoringError(f"maximum degree {max_degree(G)} exceeds 2t = {2 * t}")
    parts = [color_layer(G, sigma, L) for L in _padded_layers(G, t)]
    for part in parts:
        part.palette = Palette(1, 1)
    return combine_colorings(parts) if parts else _empty(Palette(0, 0))


def _insert_matching(
    H: SignedGraph, sigma: Mapping[int, int], t: int, M: frozenset[int], W: set[str], trace: list[str]
) -> HalfEdgeColoring:
    """S^t_2t-coloring of ``H`` given a negative matching ``M`` covering ``W``.

    ``W`` is the independent set of vertices of degree 2t+1 in ``H``. The
    rest of ``H`` is split into t layers; each matching edge joins the layer
    where its non-``W`` end has at most one half-edge. Inside a layer an
    inserted edge takes 0_i unless its ``W`` end already sits on the 0_i edge
    of a negative circuit; then it takes the pair color missing at both ends,
    after negating the rest of that circuit if necessary.
    """
    base = H.without(M)
    layers = _padded_layers(base, t)
    placed: list[list[tuple[int, str, str]]] = [[] for _ in range(t)]
    for eid in sorted(M):
        e = H.edge(eid)
        if e.u in W and e.v in W:
            raise AssertionError("max-degree vertices are not independent")
        x, y = (e.u, e.v) if e.u in W else (e.v, e.u)
        if x not in W:
            raise AssertionError(f"matching edge {eid} misses the max-degree vertices")
        for i, layer in enumerate(layers):
            if sum(1 for h in H.half_edges(y) if h.edge in layer) <= 1:
                placed[i].append((eid, x, y))
                break
        else:
            raise AssertionError(f"no layer has room at {y}")

    parts = []
    for i, layer in enumerate(layers):
        L = H.subgraph(layer)
        col = color_layer(H, sigma, layer)
        col.palette = Palette(1, 1)
        choices = {}
        for eid, x, y in placed[i]:
            at_x = [(h, col.halves[h]) for h in L.half_edges(x)]
            if len(at_x) != 2:
                raise AssertionError(f"{x} has degree {len(at_x)} in layer {i}, expected 2")
            if not any(c.is_self_inverse for _, c in at_x):
                choices[eid] = zero(1)
                continue
            (pair_half, b), = [(h, c) for h, c in at_x if not c.is_self_inverse]
            free_at_y = {c for c in missing_colors(L, col, y) if not c.is_self_inverse}
            if -b not in free_at_y:
                component = next(
                    D for D in class_components(H, col.color_class(1, False)) if pair_half.edge in D
                )
                col = _negate_component(col, component)
                trace.append(f"layer {i + 1}: negated pair colors on {sorted(component)} for matching edge {eid}")
                b = -b
            if -b not in free_at_y:
                raise AssertionError(f"no common missing pair color for matching edge {eid}")
            choices[eid] = -b
        for eid, c in choices.items():
            col.set_edge(eid, c, c)
        ok, problems = verify_coloring(H.subgraph(layer | {eid for eid, _, _ in placed[i]}), sigma, col)
        if not ok:
            raise AssertionError(f"layer {i + 1} repair failed: {problems}")
        parts.append(col)
    return combine_colorings(parts) if parts else _empty(Palette(0, 0))


def _negate_component(col: HalfEdgeColoring, component) -> HalfEdgeColoring:
    out = col.copy()
    for eid in component:
        a, b = col.pair_of(eid)
        out.set_edge(eid, -a, -b)
    return out


def claim2_color(
    G: SignedGraph, sigma: Mapping[int, int] | None, t: int, trace: list[str] | None = None
) -> tuple[dict[int, int], frozenset[str], HalfEdgeColoring]:
    """Odd Delta = 2t+1 with independent max-degree vertices: an S^t_2t-coloring
    of an equivalent signature. Returns ``(sigma', resigning set, coloring)``."""
    sigma = G.signature() if sigma is None else sigma
    trace = [] if trace is None else trace
    _, delta, W = degree_stats(G)
    if delta != 2 * t + 1 or t < 1:
        raise ColoringError(f"claim 2 needs Delta = 2t+1 with t >= 1; got Delta={delta}, t={t}")
    if not _is_independent(G, W):
        raise ColoringError("max-degree vertices are not independent")
    M = matching_covering(G, W)
    if M is None:
        raise _NoCoveringMatching("no matching covers the max-degree vertices")
    X = forest_resigning(G, sigma, M)
    sigma1 = resign(G, sigma, X)
    trace.append(f"matching {sorted(M)} covers the max-degree vertices; resigned at {sorted(X, key=G.order)}")
    col = _insert_matching(G, sigma1, t, M, set(W), trace)
    return sigma1, X, col


def claim3_color(
    G: SignedGraph, sigma: Mapping[int, int] | None, t: int, trace: list[str] | None = None
) -> tuple[dict[int, int], frozenset[str], HalfEdgeColoring]:
    """Odd Delta = 2t+1: an S^{t+1}_2t-coloring of an equivalent signature."""
    sigma = G.signature() if sigma is None else sigma
    trace = [] if trace is None else trace
    _, delta, W = degree_stats(G)
    if delta != 2 * t + 1:
        raise ColoringError(f"claim 3 needs Delta = 2t+1; got Delta={delta}, t={t}")
    M = matching_covering(G, W)
    if M is not None:
        X = forest_resigning(G, sigma, M)
        sigma1 = resign(G, sigma, X)
        trace.append(f"case 1: matching {sorted(M)} covers all max-degree vertices; colored 0_{t + 1}")
        col = claim1_color(G.without(M), sigma1, t)
        return sigma1, X, combine_colorings([col, _zero_part(M)])

    M1 = matching_max_cover(G, W)
    H1 = G.without(M1)
    W1 = {v for v in W if v not in covered_vertices(G, M1)}
    if not _is_independent(H1, W1):
        raise AssertionError("uncovered max-degree vertices are adjacent")
    M2 = matching_covering(H1, W1)
    if M2 is None:
        raise _NoCoveringMatching("no matching of G - M1 covers the remaining max-degree vertices")
    X = forest_resigning(G, sigma, M1 | M2)
    sigma1 = resign(G, sigma, X)
    trace.append(
        f"case 2: matching {sorted(M1)} colored 0_{t + 1}; matching {sorted(M2)} covers "
        f"{len(W1)} remaining max-degree vertices"
    )
    col = _insert_matching(H1, sigma1, t, M2, W1, trace)
    return sigma1, X, combine_colorings([col, _zero_part(M1)])


def resign_coloring(G: SignedGraph, col: HalfEdgeColoring, X: Iterable[str]) -> HalfEdgeColoring:
    """Carry a coloring across resigning at ``X`` by negating the half colors at ``X``."""
    X = set(X)
    out = col.copy()
    for h, c in col.halves.items():
        if G.vertex_of(h) in X:
            out.halves[h] = -c
    return out


def _fallback(G: SignedGraph, sigma: dict[int, int], bound: int, trace: list[str]):
    from .oracle import feasible

    try:
        for total in (bound, bound - 1):
            if total < 1:
                continue
            ok, col = feasible(
                G, sigma, total % 2, total // 2,
                max_edges=FALLBACK_MAX_EDGES, max_vertices=FALLBACK_MAX_VERTICES,
            )
            if ok:
                break
    except InstanceTooLargeError as exc:
        raise ColoringError(
            "positive loops at maximum-degree vertices defeat the covering matching and the "
            f"instance is too large for the exhaustive fallback ({exc})"
        ) from exc
    if not ok:
        raise AssertionError("exhaustive search found no coloring within the bound")
    X = forest_resigning(G, sigma, col.color_class(1, True)) if col.palette.t else frozenset()
    trace.append(f"fallback: exhaustive search within {bound} colors; self-inverse class resigned negative")
    return resign(G, sigma, X), X, resign_coloring(G, col, X)


def shannon_color(G: SignedGraph, sigma: Mapping[int, int] | None = None) -> ColoringResult:
    """Color any signed multigraph without negative loops with at most
    floor(3*Delta/2) colors, up to resigning."""
    sigma = dict(G.signature() if sigma is None else sigma)
    _check_colorable(G, sigma)
    _, delta, W = degree_stats(G)
    t = delta // 2
    trace: list[str] = [f"Delta={delta}, t={t}"]
    if delta % 2 == 0:
        trace.append(f"claim 1: {t} layers")
        sigma1, X, col = sigma, frozenset(), claim1_color(G, sigma, t)
    else:
        try:
            if t >= 1 and _is_independent(G, W) and matching_covering(G, W) is not None:
                trace.append("claim 2: max-degree vertices independent")
                sigma1, X, col = claim2_color(G, sigma, t, trace)
            else:
                trace.append("claim 3")
                sigma1, X, col = claim3_color(G, sigma, t, trace)
        except _NoCoveringMatching as exc:
            trace.append(f"{exc}")
            sigma1, X, col = _fallback(G, sigma, chromatic_upper_bound(G), trace)
            result = ColoringResult(col, sigma1, X, "shannon", trace)
            _self_check(G, result, original=sigma)
            return result
    before = col.palette
    col = pair_self_inverse_classes(G, sigma1, col)
    trace.append(f"pairing: {before} -> {col.palette}")
    result = ColoringResult(col, sigma1, X, "shannon", trace)
    _self_check(G, result, original=sigma)
    return result


def _self_check(G: SignedGraph, result: ColoringResult, original: Mapping[int, int] | None = None) -> None:
    ok, problems = verify_coloring(G, result.sigma, result.coloring)
    if not ok:
        raise AssertionError(f"pipeline produced an invalid coloring: {problems[:3]}")
    if original is not None and resign(G, original, result.resigned_at) != result.sigma:
        raise AssertionError("reported resigning set does not reproduce the colored signature")
