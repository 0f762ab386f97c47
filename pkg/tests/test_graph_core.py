import pytest

from graph_core import (Divisor, FiringScript, Graph, canonical_divisor, complete_graph, cycle_graph,
                        genus, linearly_equivalent, path_graph, principal_divisor, random_connected_graph)
from utils.basic import make_rng
from utils.errors import DimensionError


@pytest.mark.parametrize("d, edges, g", [(4, 6, 3), (5, 10, 6), (2, 1, 0), (6, 15, 10)])
def test_complete_graph_counts(d, edges, g):
    K = complete_graph(d)
    assert K.n_vertices == d
    assert K.n_edges == edges
    assert genus(K) == g == (d - 1) * (d - 2) // 2
    assert K.is_complete()
    assert K.label == 'complete'


def test_complete_graph_rejects_small_d():
    with pytest.raises(ValueError):
        complete_graph(1)


def test_genus_examples():
    assert genus(path_graph(3)) == 0
    doubled = Graph(4, list(complete_graph(4).edges) + [(0, 1)])
    assert genus(doubled) == 4
    assert not doubled.is_complete()


def test_genus_needs_connected_graph():
    with pytest.raises(ValueError):
        genus(Graph(3, [(0, 1)]))


def test_graph_rejects_loops_and_bad_endpoints():
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])


def test_principal_divisor_examples():
    K4 = complete_graph(4)
    assert principal_divisor(K4, [7, 7, 7, 7]) == Divisor.zero(K4)
    assert principal_divisor(K4, [1, 0, 0, 0]).coefficients == (3, -1, -1, -1)
    # firing v_5 backwards moves d-1 chips onto it from the others
    K5 = complete_graph(5)
    assert principal_divisor(K5, [0, 0, 0, 0, -1]).coefficients == (1, 1, 1, 1, -4)


def test_principal_divisor_degree_zero_and_linear():
    rng = make_rng(3)
    for _ in range(30):
        g = random_connected_graph(int(rng.integers(2, 8)), rng, extra_edges=3)
        f = [int(x) for x in rng.integers(-5, 6, size=g.n_vertices)]
        h = [int(x) for x in rng.integers(-5, 6, size=g.n_vertices)]
        assert principal_divisor(g, f).degree == 0
        both = principal_divisor(g, [a + b for a, b in zip(f, h)])
        assert both == principal_divisor(g, f) + principal_divisor(g, h)


def test_principal_divisor_dimension_check():
    with pytest.raises(DimensionError):
        principal_divisor(complete_graph(4), [1, 2, 3])


def test_linear_equivalence():
    rng = make_rng(5)
    g = random_connected_graph(6, rng, extra_edges=4)
    D = Divisor(g, [int(x) for x in rng.integers(-3, 4, size=6)])
    f = [int(x) for x in rng.integers(-4, 5, size=6)]
    assert linearly_equivalent(g, D, D + principal_divisor(g, f))
    assert linearly_equivalent(g, D + principal_divisor(g, f), D, base=0)
    assert not linearly_equivalent(g, D, D.add_chips(2, 1))

    K5 = complete_graph(5)
    assert linearly_equivalent(K5, Divisor.point(K5, 4, 5), Divisor(K5, [1] * 5))
    assert not linearly_equivalent(K5, Divisor.point(K5, 4, 5), Divisor.point(K5, 4, 4))


def test_canonical_divisor():
    assert canonical_divisor(complete_graph(5)).coefficients == (2, 2, 2, 2, 2)
    assert canonical_divisor(complete_graph(5)).degree == 2 * 6 - 2
    assert canonical_divisor(complete_graph(4)).coefficients == (1, 1, 1, 1)
    assert canonical_divisor(cycle_graph(7)) == Divisor.zero(cycle_graph(7))

    rng = make_rng(11)
    for _ in range(10):
        g = random_connected_graph(int(rng.integers(2, 9)), rng, extra_edges=int(rng.integers(0, 6)))
        assert canonical_divisor(g).degree == 2 * genus(g) - 2


def test_divisor_basics():
    K4 = complete_graph(4)
    D = Divisor(K4, [2, 0, -1, 3])
    assert D.degree == 4
    assert not D.is_effective()
    assert D.is_effective(outside=2)
    assert D.support() == (0, 2, 3)
    assert str(D) == "2 0 -1 3"
    assert (-D).coefficients == (-2, 0, 1, -3)
    assert D - D == Divisor.zero(K4)
    with pytest.raises(DimensionError):
        Divisor(K4, [1, 2])
    with pytest.raises(ValueError):
        D + Divisor.zero(complete_graph(5)).add_chips(0, 0)


def test_divisor_degree_is_exact():
    K4 = complete_graph(4)
    D = Divisor(K4, [2**70, 2**70, -1, 0])
    assert D.degree == 2**71 - 1


def test_firing_script_is_normalized():
    K4 = complete_graph(4)
    assert FiringScript(K4, [3, 5, 3, 4]).values == (0, 2, 0, 1)
    assert FiringScript(K4, [-2, -2, -2, -2]).is_zero()
    assert principal_divisor(K4, FiringScript(K4, [3, 5, 3, 4])) == principal_divisor(K4, [0, 2, 0, 1])
