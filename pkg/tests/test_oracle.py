import pytest

from signedcolor import build_graph, chromatic_index, feasible, verify_coloring
from signedcolor.exceptions import InstanceTooLargeError, NegativeLoopError
from signedcolor.generators import complete, cycle, fat_triangle


def test_feasible_circuits():
    assert feasible(cycle([1, 1, 1, 1]), None, 0, 1)[0]
    assert not feasible(cycle([-1, -1, -1]), None, 0, 1)[0]
    ok, col = feasible(cycle([-1, -1, -1]), None, 1, 1)
    assert ok and verify_coloring(cycle([-1, -1, -1]), None, col)[0]


def test_feasible_negative_loop_is_false():
    assert feasible(build_graph("e a a -"), None, 1, 3) == (False, None)


def test_feasible_witness_is_valid():
    G = build_graph("e a b +\ne a b -\ne b c +\ne c c +\ne c a -")
    ok, col = feasible(G, None, 1, 2)
    assert ok
    assert verify_coloring(G, None, col)[0]


def test_chi_negative_triangle():
    assert chromatic_index(cycle([-1, -1, -1])).chi == 3


def test_chi_fat_triangle_r2():
    rep = chromatic_index(fat_triangle(2))
    assert (rep.chi0, rep.chi1, rep.chi) == (6, 7, 6)


def test_chi_negative_digon():
    rep = chromatic_index(build_graph("e a b -\ne a b +"))
    assert (rep.chi0, rep.chi1, rep.chi) == (4, 3, 3)
    assert rep.witness.palette.size == 3


def test_chi_positive_k4():
    assert chromatic_index(complete(4)).chi == 3


def test_chi_edgeless():
    assert chromatic_index(build_graph("v a")).chi == 0


def test_chi_negative_loop():
    with pytest.raises(NegativeLoopError):
        chromatic_index(build_graph("e a b +\ne a a -"))


def test_guard():
    with pytest.raises(InstanceTooLargeError):
        chromatic_index(fat_triangle(6))
    assert chromatic_index(cycle([1] * 11), max_vertices=11).chi == 2
