from itertools import combinations

import pytest
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from abct.exact_arith import MultiPoly
from abct.pluecker import RationalMatrix, is_tp, pluecker_of, projectively_equal
from abct.veronese import (chart2_matrix, chart2_table, chart3_matrix, chart_theta,
                           pluecker_image, sample_on_V, sample_positive_gr2, seeded_params,
                           theta6, theta6_extended, veronese_matrix)
from oracles import minors


@given(st.integers(5, 8), st.integers(0, 10 ** 6))
@settings(max_examples=20, deadline=None)
def test_pluecker_image_is_product_of_pairs(n, seed):
    M2 = sample_positive_gr2(n, seeded_params(n, seed))
    P2 = pluecker_of(M2)
    P3 = pluecker_of(veronese_matrix(3, M2))
    for I in combinations(range(1, n + 1), 3):
        assert P3[I] == pluecker_image(I, P2)


def test_veronese_of_positive_points_is_totally_positive():
    assert is_tp(pluecker_of(sample_on_V(7, seeded_params(7, 3))))


def test_veronese_k4_matches_oracle():
    M2 = RationalMatrix([[1, 1, 1, 1, 1], [0, 1, 2, 3, 5]])
    V = veronese_matrix(4, M2)
    ref = minors(V)
    P2 = pluecker_of(M2)
    for I, v in ref.items():
        assert v == pluecker_image(I, P2)


def test_sample_rejects_non_increasing():
    with pytest.raises(ValueError):
        sample_positive_gr2(4, [0, 2, 1, 3])


def test_seeded_params_deterministic():
    assert seeded_params(6, 11) == seeded_params(6, 11)
    assert seeded_params(6, 11) == sorted(set(seeded_params(6, 11)))


def test_theta6_rank_on_and_off_conic():
    on = sample_on_V(6, seeded_params(6, 0))
    assert theta6(on).rank() == 5
    off = RationalMatrix([[1, 0, 0, 1, 1, 2], [0, 1, 0, 1, 2, 3], [0, 0, 1, 1, 3, 7]])
    assert theta6(off).rank() == 6


def test_theta6_extended_rejects_overlaps():
    M = sample_on_V(6, seeded_params(6, 0))
    with pytest.raises(ValueError):
        theta6_extended(M, [[1, 2], [2, 3]])


def test_chart_theta_is_veronese_on_the_chart():
    """Symbolic chart images agree with the Veronese of the 2 x n chart at a point."""
    n = 7
    T = chart2_table(n)
    pt = [mpq(3), mpq(5)] + [mpq(i + 2, 3) for i in range(n - 3)] + [mpq(7, i + 1) for i in range(n - 3)]
    M2 = RationalMatrix([[e.eval(pt) for e in row] for row in chart2_matrix(n, T)])
    rules = chart_theta(n, T)
    vals = {s: f.eval(pt) for s, f in rules.items()}
    from abct.veronese import chart3_table
    T3 = chart3_table(n)
    M3 = RationalMatrix([[e.eval([vals[s] for s in T3.names]) for e in row]
                         for row in chart3_matrix(n, T3)])
    assert projectively_equal(pluecker_of(M3), pluecker_of(veronese_matrix(3, M2)))


def test_chart_matrices_layout():
    rows = chart3_matrix(5)
    assert [str(e) for e in rows[1][:3]] == ["0", "0", "1"]
    assert isinstance(rows[0][3], MultiPoly)
