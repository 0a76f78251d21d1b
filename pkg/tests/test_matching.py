import random

from signedcolor import build_graph, matching_covering, matching_max_cover, maximum_matching
from signedcolor.generators import complete, cycle, random_signed_multigraph
from signedcolor.matching import covered_vertices, is_matching

from reference import all_matchings, best_cover


def test_maximum_matching_sizes():
    assert len(maximum_matching(complete(4))) == 2
    assert len(maximum_matching(cycle([1, 1, 1]))) == 1
    path = build_graph("e a b +\ne b c +\ne c d +\ne d e +\ne e f +")
    assert len(maximum_matching(path)) == 3


def test_loops_never_match():
    G = build_graph("e a a +\ne b b +")
    assert maximum_matching(G) == frozenset()
    assert matching_covering(G, {"a"}) is None


def test_covering_star_center():
    G = build_graph("e c x +\ne c y +\ne c z +")
    M = matching_covering(G, {"c"})
    assert M is not None and len(M) == 1


def test_covering_triangle_impossible():
    assert matching_covering(cycle([1, 1, 1]), {"v0", "v1", "v2"}) is None


def test_max_cover_examples():
    T = cycle([1, 1, 1])
    M = matching_max_cover(T, T.vertices)
    assert len(covered_vertices(T, M)) == 2
    K = complete(4)
    assert len(covered_vertices(K, matching_max_cover(K, K.vertices))) == 4
    two = build_graph("e a b +\ne b c +\ne c a +\ne d e +\ne e f +\ne f d +")
    assert len(covered_vertices(two, matching_max_cover(two, two.vertices))) == 4


def test_lexicographic_tie_break():
    G = build_graph("e a b +\ne c d +\ne b c +")
    assert maximum_matching(G) == frozenset({0, 1})
    assert matching_max_cover(cycle([1, 1, 1, 1]), {"v0"}) == frozenset({0})


def test_against_brute_force():
    rng = random.Random(11)
    for _ in range(300):
        G = random_signed_multigraph(rng, 6, 10, loop_probability=0.15)
        T = {v for v in G.vertices if rng.random() < 0.5}
        M = matching_max_cover(G, T)
        assert is_matching(G, M)
        assert len(covered_vertices(G, M) & T) == best_cover(G, T)
        uncovered = T - covered_vertices(G, M)
        for e in G.edges:
            if e.id not in M and not e.is_loop:
                assert not (e.u in uncovered and e.v in uncovered)
        assert len(maximum_matching(G)) == max(len(m) for m in all_matchings(G))
        cov = matching_covering(G, T)
        assert (cov is not None) == (best_cover(G, T) == len(T))
        if cov is not None:
            assert T <= covered_vertices(G, cov)
