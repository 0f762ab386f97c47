from itertools import product

import pytest

from gonality import (decompose_rank, gonality_bruteforce, gonality_formula, gonality_sequence,
                      gonality_table, max_rank_of_degree, reduced_classes, reduced_divisors_of_degree,
                      sharpness_certificate, specialization_family, upper_witness, verify_theorem)
from graph_core import Divisor, complete_graph
from rank_engine import rank_complete_fast
from reduction import is_v_reduced
from utils.basic import triangular
from utils.errors import OutOfRangeError


def test_decompose_rank_examples():
    dec = decompose_rank(6, 1)
    assert (dec.k, dec.h, dec.gamma) == (1, 1, 5)
    dec = decompose_rank(7, 9)
    assert (dec.k, dec.h, dec.gamma) == (3, 0, 21)
    dec = decompose_rank(7, 7)
    assert (dec.k, dec.h, dec.gamma) == (3, 2, 19)


def test_decompose_rank_errors():
    with pytest.raises(ValueError):
        decompose_rank(5, 0)
    with pytest.raises(ValueError):
        decompose_rank(3, 1)
    with pytest.raises(OutOfRangeError):
        decompose_rank(5, 6)


@pytest.mark.parametrize("d", [4, 5, 6, 7, 8, 9])
def test_every_rank_below_genus_decomposes_once(d):
    g = (d - 1) * (d - 2) // 2
    for r in range(1, g):
        dec = decompose_rank(d, r)
        assert dec.k * (dec.k + 3) // 2 - dec.h == r
        assert 1 <= dec.k <= d - 3
        assert 0 <= dec.h <= dec.k


def test_gonality_formula_examples():
    assert [gonality_formula(5, r) for r in range(1, 7)] == [4, 5, 8, 9, 10, 12]
    assert gonality_sequence(5) == [4, 5, 8, 9, 10, 12]
    assert gonality_sequence(4, max_r=5) == [3, 4, 6, 7, 8]
    assert gonality_formula(6, 1) == 5
    assert gonality_formula(4, 3) == 6
    assert gonality_formula(4, 10) == 13


def test_gonality_bruteforce_examples():
    assert gonality_bruteforce(4, 1) == 3
    assert gonality_bruteforce(5, 2) == 5
    assert gonality_bruteforce(5, 6) == 12
    with pytest.raises(ValueError):
        gonality_bruteforce(5, 0)


def test_reduced_classes_are_parking_functions():
    # one class per spanning tree: d^(d-2)
    assert len(reduced_classes(4)) == 16
    assert len(reduced_classes(5)) == 125
    K5 = complete_graph(5)
    for c in reduced_classes(5):
        assert is_v_reduced(K5, Divisor(K5, c + (0,)), 4)


def test_max_rank_of_degree_edges():
    assert max_rank_of_degree(5, -1) == -1
    assert max_rank_of_degree(5, 0) == 0
    assert max_rank_of_degree(5, 11) == 5


@pytest.mark.parametrize("d", [4, 5])
def test_formula_matches_bruteforce(d):
    g = (d - 1) * (d - 2) // 2
    for r in range(1, g + 3):
        assert gonality_formula(d, r) == gonality_bruteforce(d, r)


@pytest.mark.slow
@pytest.mark.parametrize("d", [6, 7])
def test_formula_matches_bruteforce_slow(d):
    g = (d - 1) * (d - 2) // 2
    for r in range(1, g + 3):
        assert gonality_formula(d, r) == gonality_bruteforce(d, r)


def test_gonality_table_rows():
    rows = gonality_table(5)
    assert rows[0] == (1, 1, 1, 4, 4)
    assert rows[-1] == (6, None, None, 12, 12)
    assert len(rows) == 6
    assert all(row[3] == row[4] for row in rows)
    assert gonality_table(5, max_r=2, bruteforce=False) == [(1, 1, 1, 4, None), (2, 1, 0, 5, None)]


@pytest.mark.parametrize("d", [5, 6])
def test_upper_witness_ranks(d):
    for k in range(1, d - 2):
        for h in range(k + 1):
            D = upper_witness(d, k, h)
            assert D.degree == k * d - h
            assert rank_complete_fast(d, D).rank == k * (k + 3) // 2 - h


def test_upper_witness_rejects_bad_parameters():
    with pytest.raises(ValueError):
        upper_witness(5, 3, 0)
    with pytest.raises(ValueError):
        upper_witness(5, 1, 2)


def test_specialization_of_constant_divisor():
    result = specialization_family(6, 2, [0] * 6)
    assert result.expected_rank == 5
    assert result.divisor.coefficients == (2,) * 6
    assert (result.divisor - result.witness).coefficients == (-1, 0, 1, 2, 2, 2)
    assert result.witness.degree == result.expected_rank + 1
    assert result.reduced.base_coefficient < 0
    assert rank_complete_fast(6, result.divisor).rank == 5


def test_specialization_with_two_removed_points():
    result = specialization_family(5, 2, [1, 1, 0, 0, 0])
    assert result.divisor.coefficients == (1, 1, 2, 2, 2)
    assert result.expected_rank == 3
    assert rank_complete_fast(5, result.divisor).rank == 3


def test_specialization_labels_sort_by_a():
    result = specialization_family(6, 3, [0, 0, 2, 0, 1, 0])
    assert result.labels[:2] == (2, 4)
    assert rank_complete_fast(6, result.divisor).rank == result.expected_rank == 6


@pytest.mark.parametrize("d, k", [(5, 1), (5, 2), (6, 1), (6, 2), (6, 3)])
def test_specialization_every_split(d, k):
    for a in product(range(k + 1), repeat=d):
        if sum(a) > k:
            continue
        result = specialization_family(d, k, a)
        assert result.witness.is_effective()
        assert result.witness.degree == result.expected_rank + 1
        assert rank_complete_fast(d, result.divisor).rank == result.expected_rank


def test_specialization_rejects_bad_splits():
    with pytest.raises(ValueError):
        specialization_family(5, 2, [0, 0, 0, 0])
    with pytest.raises(ValueError):
        specialization_family(5, 2, [-1, 0, 0, 0, 0])
    with pytest.raises(ValueError):
        specialization_family(5, 1, [1, 1, 0, 0, 0])


def test_sharpness_example_takes_t2_route():
    K6 = complete_graph(6)
    cert = sharpness_certificate(6, 2, Divisor(K6, [0, 1, 1, 1, 1, 5]))
    assert cert.route == 't2'
    assert (cert.a, cert.b) == (1, 0)
    assert (cert.t1, cert.t2) == (5, 3)
    assert cert.witness.coefficients == (1, 1, 0, 0, 0, 1)
    assert cert.ordering == (0, 1, 2, 3, 4)


def test_sharpness_immediate_route():
    K5 = complete_graph(5)
    cert = sharpness_certificate(5, 1, Divisor(K5, [0, 1, 2, 0, 0]))
    assert cert.route == 'immediate'
    assert cert.a is None
    assert cert.witness.coefficients == (0, 0, 0, 0, 1)


def test_sharpness_rejects_bad_input():
    K6 = complete_graph(6)
    with pytest.raises(ValueError):
        sharpness_certificate(6, 2, Divisor(K6, [0, 1, 1, 1, 1, 6]))
    with pytest.raises(ValueError):
        sharpness_certificate(6, 2, Divisor(K6, [1, 1, 1, 1, 1, 4]))
    with pytest.raises(ValueError):
        sharpness_certificate(6, 4, Divisor(K6, [0, 1, 1, 1, 1, 15]))


@pytest.mark.parametrize("d", [4, 5, 6])
def test_sharpness_certificate_for_every_divisor(d):
    for k in range(1, d - 2):
        bound = triangular(k)
        for D in reduced_divisors_of_degree(d, k * (d - 1) - 1):
            cert = sharpness_certificate(d, k, D)
            assert cert.witness.is_effective()
            assert cert.witness.degree == bound
            if cert.route == 'immediate':
                assert D[d - 1] < bound
            elif cert.route == 't1':
                assert cert.t1 <= bound
            else:
                assert cert.t1 > bound >= cert.t2


def test_sharpness_bound_on_rank():
    d = 5
    for k in range(1, d - 2):
        for D in reduced_divisors_of_degree(d, k * (d - 1) - 1):
            assert rank_complete_fast(d, D).rank < triangular(k)


def test_verify_theorem_on_k4():
    checks = verify_theorem(4)
    assert all(check.passed for check in checks), [str(c) for c in checks if not c.passed]
    names = [check.name for check in checks]
    assert "rank k=1" in names
    assert "gamma r=5" in names
    assert str(checks[0]) == "rank k=1 ok rank 2 expected 2"


def test_verify_theorem_on_k5():
    assert all(check.passed for check in verify_theorem(5, max_r=4))
