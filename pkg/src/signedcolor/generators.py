"""Small named graphs and random instances used by tests and demos."""
from __future__ import annotations

import itertools
import random

from .graph import NEGATIVE, POSITIVE, SignedGraph


def fat_triangle(r: int, sign: int = NEGATIVE) -> SignedGraph:
    """Three vertices, every pair joined by ``r`` parallel edges."""
    edges = []
    for a, b in (("a", "b"), ("b", "c"), ("a", "c")):
        edges += [(a, b, sign)] * r
    return SignedGraph.from_edges(edges)


def cycle(signs) -> SignedGraph:
    """Circuit with the given edge signs; length 1 is a loop, 2 a digon."""
    n = len(signs)
    return SignedGraph.from_edges([(f"v{i}", f"v{(i + 1) % n}", s) for i, s in enumerate(signs)])


def complete(n: int, sign: int = POSITIVE) -> SignedGraph:
    names = "abcdefghijklmnopqrstuvwxyz"
    return SignedGraph.from_edges([(names[i], names[j], sign) for i, j in itertools.combinations(range(n), 2)])


def cubic_without_perfect_matching(sign: int = POSITIVE) -> SignedGraph:
    """10-vertex cubic multigraph with a cut vertex and no 1-factor.

    A hub ``u`` joins three blocks; each block has ``x`` adjacent to ``y``
    and ``z`` and a doubled edge ``yz``.
    """
    edges = []
    for i in range(3):
        x, y, z = f"x{i}", f"y{i}", f"z{i}"
        edges += [("u", x, sign), (x, y, sign), (x, z, sign), (y, z, sign), (y, z, sign)]
    return SignedGraph.from_edges(edges)


def random_signed_multigraph(
    rng: random.Random,
    max_vertices: int = 6,
    max_edges: int = 12,
    loop_probability: float = 0.1,
    negative_loops: bool = False,
) -> SignedGraph:
    n = rng.randint(1, max_vertices)
    m = rng.randint(1, max_edges)
    vs = [f"v{i}" for i in range(n)]
    edges = []
    for _ in range(m):
        u = rng.choice(vs)
        v = u if n == 1 or rng.random() < loop_probability else rng.choice([w for w in vs if w != u])
        sign = rng.choice((POSITIVE, NEGATIVE))
        if u == v and not negative_loops:
            sign = POSITIVE
        edges.append((u, v, sign))
    return SignedGraph.from_edges(edges, vertices=vs)


def random_balanced(rng: random.Random, max_vertices: int = 6, max_edges: int = 10) -> SignedGraph:
    """Random multigraph whose signature is a random resigning of all-positive."""
    G = random_signed_multigraph(rng, max_vertices, max_edges, negative_loops=False)
    side = {v: rng.choice((POSITIVE, NEGATIVE)) for v in G.vertices}
    return G.with_signature({e.id: side[e.u] * side[e.v] for e in G.edges})
