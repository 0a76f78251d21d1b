import random

import pytest

from signedcolor import (
    Palette,
    build_graph,
    chromatic_index,
    chromatic_upper_bound,
    claim1_color,
    claim2_color,
    claim3_color,
    degree_stats,
    koenig_color,
    koenig_is_delta,
    resign,
    shannon_color,
    signatures_equivalent,
    verify_coloring,
)
from signedcolor.coloring import structure_violations
from signedcolor.exceptions import ColoringError, NegativeLoopError, NotBalancedError
from signedcolor.generators import complete, cubic_without_perfect_matching, cycle, fat_triangle, random_signed_multigraph
from signedcolor.matching import covered_vertices


def _self_inverse_negative(col, sigma):
    for i in range(1, col.palette.t + 1):
        assert all(sigma[eid] == -1 for eid in col.color_class(i, True))


def test_upper_bound():
    assert chromatic_upper_bound(cycle([1, 1, 1])) == 3
    five = build_graph("\n".join(f"e c x{i} +" for i in range(5)))
    assert chromatic_upper_bound(five) == 7
    assert chromatic_upper_bound(build_graph("v a")) == 0


def test_koenig_is_delta_examples():
    assert koenig_is_delta(cycle([1, 1, 1])) == (True, frozenset())
    ok, M = koenig_is_delta(build_graph("e a b +\ne a b +\ne a b +"))
    assert ok and len(M) == 1
    assert koenig_is_delta(cubic_without_perfect_matching()) == (False, None)
    with pytest.raises(ColoringError):
        koenig_is_delta(build_graph("v a"))


def test_koenig_triangle():
    r = koenig_color(cycle([1, 1, 1]))
    assert r.colors == 2 and r.palette == Palette(0, 1)


def test_koenig_k4():
    G = complete(4)
    r = koenig_color(G)
    assert r.palette == Palette(1, 1)
    zero_class = r.coloring.color_class(1, True)
    assert len(zero_class) == 2 and len(covered_vertices(G, zero_class)) == 4
    assert verify_coloring(G, r.sigma, r.coloring)[0]
    assert signatures_equivalent(G, G.signature(), r.sigma)


def test_koenig_cubic_sharpness():
    r = koenig_color(cubic_without_perfect_matching())
    assert r.colors == 4


def test_koenig_balanced_but_not_all_positive():
    G = build_graph("e a b -\ne b c -\ne c a +\ne a b -")
    r = koenig_color(G)
    assert r.colors == 3
    assert verify_coloring(G, r.sigma, r.coloring)[0]


def test_koenig_rejects_unbalanced():
    with pytest.raises(NotBalancedError):
        koenig_color(cycle([1, 1, -1]))


def test_shannon_fat_triangle_r1():
    r = shannon_color(fat_triangle(1))
    assert r.colors == 3


def test_shannon_single_edge():
    r = shannon_color(build_graph("e a b +"))
    assert r.colors == 1 and r.palette == Palette(1, 0)
    assert r.sigma[0] == -1
    assert "case 1" in " ".join(r.trace)


def test_shannon_negative_digon():
    G = build_graph("e a b -\ne a b +")
    r = shannon_color(G)
    assert r.colors <= 3
    assert verify_coloring(G, r.sigma, r.coloring)[0]


def test_shannon_errors():
    with pytest.raises(NegativeLoopError):
        shannon_color(build_graph("e a b +\ne b b -"))
    with pytest.raises(ColoringError):
        shannon_color(build_graph("v a"))


def test_claim1_examples():
    col = claim1_color(fat_triangle(1), None, 1)
    assert col.palette == Palette(1, 1) and len(col.color_class(1, True)) == 1
    _self_inverse_negative(col, fat_triangle(1).signature())
    pos = fat_triangle(2, sign=1)
    col = claim1_color(pos, None, 2)
    assert col.palette == Palette(2, 2)
    assert not col.color_class(1, True) and not col.color_class(2, True)
    digons = build_graph("e a b +\ne a b -\ne c d -\ne c d +")
    col = claim1_color(digons, None, 1)
    assert col.color_class(1, True) == {1, 2}


def test_claim2_star():
    G = build_graph("e c x +\ne c y +\ne c z +")
    sigma1, X, col = claim2_color(G, None, 1)
    assert col.palette == Palette(1, 1)
    assert verify_coloring(G, sigma1, col)[0]
    assert resign(G, None, X) == sigma1
    _self_inverse_negative(col, sigma1)


def test_claim2_rejects_adjacent_max_degree_vertices():
    with pytest.raises(ColoringError):
        claim2_color(complete(4), None, 1)


def _odd_instances(seed, count, predicate):
    rng = random.Random(seed)
    found = []
    for _ in range(20000):
        G = random_signed_multigraph(rng, 7, 14, loop_probability=0.05)
        _, delta, W = degree_stats(G)
        if delta % 2 == 1 and delta >= 3 and predicate(G, W):
            found.append(G)
            if len(found) == count:
                break
    return found


def _independent(G, W):
    return not any(e.u in W and e.v in W and not e.is_loop for e in G.edges)


def test_claim2_repair_branch_fires_and_stays_valid():
    fired = 0
    for G in _odd_instances(1, 300, _independent):
        trace = []
        sigma1, X, col = claim2_color(G, None, degree_stats(G)[1] // 2, trace)
        assert verify_coloring(G, sigma1, col)[0]
        assert signatures_equivalent(G, G.signature(), sigma1)
        _self_inverse_negative(col, sigma1)
        fired += any("negated pair colors" in line for line in trace)
    assert fired > 0


def test_claim3_cases():
    cases = set()
    for G in _odd_instances(2, 300, lambda G, W: not _independent(G, W)):
        trace = []
        t = degree_stats(G)[1] // 2
        try:
            sigma1, X, col = claim3_color(G, None, t, trace)
        except Exception as exc:  # loops at max-degree vertices can defeat the covering matching
            assert "covers" in str(exc)
            continue
        assert col.palette == Palette(t + 1, t)
        assert verify_coloring(G, sigma1, col)[0]
        _self_inverse_negative(col, sigma1)
        cases.add(trace[0].split(":")[0])
    assert "case 1" in cases


@pytest.mark.parametrize("sign", [1, -1])
def test_claim3_case2_on_cubic_graph_without_1_factor(sign):
    G = cubic_without_perfect_matching(sign)
    trace = []
    sigma1, X, col = claim3_color(G, None, 1, trace)
    assert trace[0].startswith("case 2")
    assert col.palette == Palette(2, 1)
    assert verify_coloring(G, sigma1, col)[0]
    _self_inverse_negative(col, sigma1)
    r = shannon_color(G)
    assert r.colors <= 4 and structure_violations(G, r.sigma, r.coloring) == []


def test_claim3_triangle_with_doubled_edge():
    G = build_graph("e a b -\ne b c -\ne c a -\ne a b -")
    sigma1, X, col = claim3_color(G, None, 1)
    assert col.palette == Palette(2, 1)
    assert verify_coloring(G, sigma1, col)[0]
    r = shannon_color(G)
    assert r.colors <= 4


def test_palette_parity_table():
    # even Delta = 2t: S^t_2t pairs down to S^0_3t (t even) or S^1_{3t-1} (t odd)
    expected = {
        ("even", 0): lambda t: Palette(0, 3 * t // 2),
        ("even", 1): lambda t: Palette(1, (3 * t - 1) // 2),
    }
    for t in (1, 2, 3):
        G = fat_triangle(t)
        r = shannon_color(G)
        assert r.palette == expected[("even", t % 2)](t)


def test_loop_gap_instance_uses_fallback():
    # three max-degree vertices, each with a positive loop, share one neighbour
    G = build_graph("e x1 x1 +\ne x2 x2 +\ne x3 x3 +\ne x1 y +\ne x2 y +\ne x3 y +")
    r = shannon_color(G)
    assert any("fallback" in line for line in r.trace)
    assert r.colors <= chromatic_upper_bound(G) == 4
    assert chromatic_index(G).chi == 4
    assert verify_coloring(G, r.sigma, r.coloring)[0]
    assert structure_violations(G, r.sigma, r.coloring) == []


def test_results_carry_resigning_set():
    rng = random.Random(9)
    for _ in range(200):
        G = random_signed_multigraph(rng)
        r = shannon_color(G)
        assert resign(G, None, r.resigned_at) == r.sigma
