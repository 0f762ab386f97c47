import pytest

from gonality import gonality_formula
from graph_core import Divisor, complete_graph, cycle_graph, genus
from metric_lab import (EdgeLengths, ExperimentRow, check_metric_reduced, half_reduced_divisors_of_degree,
                        half_subdivision, lemma_battery, lemma_check, lemma_witness,
                        metric_sharpness_certificate, metric_rank, proposition_battery,
                        random_vertex_divisor, segment_weights, subdivide, subdivision_invariance_battery,
                        unit_metric_gonality)
from rank_engine import effective_divisors, rank_oracle
from reduction import is_v_reduced
from utils.basic import make_rng, triangular
from utils.errors import ResourceLimitError, UnsupportedGraphError


def test_subdivided_triangle_is_a_hexagon():
    K3 = complete_graph(3)
    sub = subdivide(K3, EdgeLengths.uniform(K3, 2))
    assert sub.graph.n_vertices == 6
    assert sub.graph.n_edges == 6
    assert genus(sub.graph) == 1
    assert all(deg == 2 for deg in sub.graph.degrees)
    assert list(sub.originals) == [0, 1, 2]


def test_subdivision_counts():
    K4 = complete_graph(4)
    sub = subdivide(K4, [1, 1, 1, 1, 1, 3])
    assert sub.graph.n_vertices == 6
    assert sub.graph.n_edges == 8
    assert genus(sub.graph) == 3
    assert sub.interiors[5] == (4, 5)
    assert sub.origin[4] == (5, 1)
    assert sub.interior(3, 2) == (4, 5)
    assert sub.interior(0, 1) == ()


def test_subdivision_cap():
    K5 = complete_graph(5)
    lengths = EdgeLengths.uniform(K5, 3)
    assert lengths.total_vertices == 25
    with pytest.raises(ResourceLimitError):
        subdivide(K5, lengths, cap=20)
    assert subdivide(K5, lengths, cap=25).graph.n_vertices == 25


@pytest.mark.parametrize("lengths", [[1, 1, 1], [1, 1, 1, 1, 1, 0], [1, 1, 1, 1, 1, 1.5],
                                     [1, 1, 1, 1, 1, -2]])
def test_edge_lengths_validation(lengths):
    with pytest.raises(ValueError):
        EdgeLengths(complete_graph(4), lengths)


def test_random_edge_lengths_use_choices():
    K5 = complete_graph(5)
    lengths = EdgeLengths.random(K5, make_rng(3), choices=(2, 5))
    assert len(lengths) == 10
    assert set(lengths) <= {2, 5}
    assert EdgeLengths.random(K5, make_rng(3), choices=(2, 5)).lengths == lengths.lengths


def test_unit_lengths_give_graph_rank():
    K5 = complete_graph(5)
    assert metric_rank(5, EdgeLengths.uniform(K5), [2] * 5) == 5
    rng = make_rng(41)
    for _ in range(5):
        D = random_vertex_divisor(K5, rng)
        assert metric_rank(5, [1] * 10, D) == rank_oracle(K5, D).rank



@pytest.mark.parametrize("d", [4, 5])
def test_random_vertex_divisor_degree_range(d):
    g = complete_graph(d)
    rng = make_rng(d)
    degrees = [random_vertex_divisor(g, rng).degree for _ in range(200)]
    assert all(0 <= x <= 2 * genus(g) - 2 for x in degrees)
    assert len(set(degrees)) > 1

def test_full_support_agrees_with_original_vertices():
    K4 = complete_graph(4)
    lengths = EdgeLengths.uniform(K4, 2)
    for values in ([1, 1, 1, 0], [2, 0, 0, 1], [1, 1, 1, 1]):
        assert metric_rank(4, lengths, values) == metric_rank(4, lengths, values, full_support=True)


def test_proposition_battery_few_trials():
    rows = proposition_battery(5, trials=2, seed=0)
    assert len(rows) == 2
    assert all(row.passed and row.value == 5 for row in rows)
    with pytest.raises(ValueError):
        proposition_battery(4, trials=1)


def test_lemma_witness():
    assert lemma_witness(6, 2).coefficients == (3, 2, 1, 0, 0, 0)
    assert lemma_witness(6, 2).degree == 2 * 5 // 2 + 1
    assert lemma_witness(5, 1).coefficients == (2, 1, 0, 0, 0)


def test_lemma_check_on_fixed_lengths():
    K5 = complete_graph(5)
    assert lemma_check(5, 1, EdgeLengths.uniform(K5))
    assert lemma_check(5, 2, [1, 2, 3, 1, 2, 3, 1, 2, 3, 1])


@pytest.mark.parametrize("d", [4, 5])
def test_lemma_battery(d):
    rows = lemma_battery(d, trials=2, seed=7)
    assert len(rows) == 2 * (d - 3)
    assert all(row.passed for row in rows)
    assert all(row.value <= row.expected for row in rows)


def test_experiment_row_format():
    row = ExperimentRow('lemma', 4, 1, 0, (1, 2, 3), 2, 2, True)
    assert str(row) == "lemma 4 1 0 1,2,3 2 2 ok"
    row = ExperimentRow('invariance', 4, None, 3, (2, 2), 1, 0, False)
    assert str(row) == "invariance 4 - 3 2,2 1 0 FAIL"


def halved_k6_example():
    K6 = complete_graph(6)
    sub = subdivide(K6, EdgeLengths.uniform(K6, 2))
    values = [0] * sub.graph.n_vertices
    values[2] = 1
    values[4] = 2
    values[5] = 3
    for u, w in [(0, 2), (0, 3), (1, 3), (0, 4), (4, 5)]:
        values[sub.interior(u, w)[0]] = 1
    return sub, Divisor(sub.graph, values)


def test_segment_weights_example():
    sub, D = halved_k6_example()
    assert segment_weights(sub, D, 5, (0, 1, 2, 3, 4)) == (0, 0, 2, 2, 4)
    report = check_metric_reduced(sub, D, 5)
    assert report.reduced
    assert bool(report)
    assert all(x <= i for i, x in enumerate(report.weights))
    assert is_v_reduced(sub.graph, D, 5)


def test_two_chips_inside_an_edge():
    K4 = complete_graph(4)
    sub = subdivide(K4, EdgeLengths.uniform(K4, 3))
    values = [0] * sub.graph.n_vertices
    for x in sub.interior(0, 1):
        values[x] = 1
    D = Divisor(sub.graph, values)
    report = check_metric_reduced(sub, D, 3)
    assert report.effective
    assert not report.interiors_ok
    assert not report.reduced
    assert report.ordering is None
    assert not is_v_reduced(sub.graph, D, 3)


def test_metric_reduced_rejects_interior_base():
    K4 = complete_graph(4)
    sub = subdivide(K4, EdgeLengths.uniform(K4, 2))
    with pytest.raises(ValueError):
        check_metric_reduced(sub, Divisor.zero(sub.graph), 7)



def test_metric_reduced_needs_complete_graph():
    C4 = cycle_graph(4)
    sub = subdivide(C4, EdgeLengths.uniform(C4, 2))
    with pytest.raises(UnsupportedGraphError):
        check_metric_reduced(sub, Divisor.zero(sub.graph), 0)

def test_metric_reduced_matches_burning_on_halved_k4():
    K4 = complete_graph(4)
    sub = subdivide(K4, EdgeLengths.uniform(K4, 2))
    n = sub.graph.n_vertices
    checked = 0
    for degree in range(4):
        for values in effective_divisors(n, degree):
            D = Divisor(sub.graph, values)
            assert check_metric_reduced(sub, D, 3).reduced == is_v_reduced(sub.graph, D, 3)
            checked += 1
    assert checked == 286


def test_subdivision_invariance_on_k4():
    rows = subdivision_invariance_battery(4, trials=5, seed=1)
    assert len(rows) == 10
    assert all(row.passed for row in rows)


@pytest.mark.slow
def test_subdivision_invariance_on_k5():
    assert all(row.passed for row in subdivision_invariance_battery(5, trials=20, seed=2))


@pytest.mark.parametrize("r", [1, 2, 3])
def test_unit_metric_gonality_on_k4(r):
    assert unit_metric_gonality(4, r) == gonality_formula(4, r)


@pytest.mark.slow
@pytest.mark.parametrize("r", [1, 2, 3, 4, 5, 6])
def test_unit_metric_gonality_on_k5(r):
    assert unit_metric_gonality(5, r) == gonality_formula(5, r)


@pytest.mark.slow
def test_subdivision_invariance_full_k4():
    rows = subdivision_invariance_battery(4, trials=50, seed=0)
    assert len(rows) == 100
    assert all(row.passed for row in rows)


@pytest.mark.slow
def test_subdivision_invariance_full_k5():
    rows = subdivision_invariance_battery(5, trials=50, seed=0)
    assert len(rows) == 100
    assert all(row.passed for row in rows)


@pytest.mark.slow
@pytest.mark.parametrize("d", [4, 5])
def test_lemma_battery_full(d):
    rows = lemma_battery(d, trials=20, seed=0)
    assert len(rows) == 20 * (d - 3)
    assert all(row.passed for row in rows)


@pytest.mark.slow
def test_proposition_battery_full():
    rows = proposition_battery(5, trials=10, seed=0)
    assert len(rows) == 10
    assert all(row.passed for row in rows)


def halved_k5_example():
    sub = half_subdivision(5)
    values = [0] * sub.graph.n_vertices
    values[sub.interior(0, 1)[0]] = 1
    values[2] = 1
    values[4] = 5
    return sub, Divisor(sub.graph, values)


def test_metric_certificate_takes_t2_route():
    sub, D = halved_k5_example()
    cert = metric_sharpness_certificate(sub, 2, D)
    assert cert.ordering == (0, 3, 1, 2)
    assert (cert.a, cert.b) == (1, 1)
    assert (cert.t1, cert.t2) == (4, 3)
    assert cert.route == 't2'
    assert cert.witness.coefficients[:5] == (1, 0, 0, 0, 2)
    assert cert.witness.degree == 3


def test_metric_certificate_immediate_route():
    sub = half_subdivision(4)
    values = [0] * sub.graph.n_vertices
    values[sub.interior(0, 1)[0]] = 1
    values[1] = 1
    D = Divisor(sub.graph, values)
    cert = metric_sharpness_certificate(sub, 1, D)
    assert cert.route == 'immediate'
    assert cert.witness.coefficients[3] == 1
    assert cert.witness.degree == 1


def test_metric_certificate_rejects_bad_input():
    sub, D = halved_k5_example()
    with pytest.raises(ValueError):
        metric_sharpness_certificate(sub, 1, D)
    with pytest.raises(ValueError):
        metric_sharpness_certificate(sub, 3, D)
    values = [0] * sub.graph.n_vertices
    values[:5] = [1, 1, 1, 1, 3]
    with pytest.raises(ValueError):
        metric_sharpness_certificate(sub, 2, Divisor(sub.graph, values))
    K5 = complete_graph(5)
    uneven = subdivide(K5, [1, 2, 1, 1, 1, 1, 1, 1, 1, 1])
    with pytest.raises(UnsupportedGraphError):
        metric_sharpness_certificate(uneven, 2, Divisor.zero(uneven.graph))


def check_every_metric_certificate(d):
    checked = 0
    for k in range(1, d - 2):
        bound = triangular(k)
        for D in half_reduced_divisors_of_degree(d, k * (d - 1) - 1):
            cert = metric_sharpness_certificate(half_subdivision(d), k, D)
            assert cert.witness.is_effective()
            assert cert.witness.degree == bound
            if cert.route == 'immediate':
                assert D[d - 1] < bound
            elif cert.route == 't1':
                assert cert.t1 <= bound
            else:
                assert cert.t1 > bound >= cert.t2
            checked += 1
    assert checked > 0


def test_metric_certificate_for_every_divisor_on_k4():
    check_every_metric_certificate(4)


@pytest.mark.slow
def test_metric_certificate_for_every_divisor_on_k5():
    check_every_metric_certificate(5)
