import pytest
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from abct.pluecker import RationalMatrix, is_tnn, pluecker_of
from abct.positroid import (BoundedAffinePermutation, CyclicRankMatrix, GrassmannNecklace,
                            bcfw_chart_coords, bcfw_factorization, bcfw_matrix, bcfw_table,
                            bcfw_word, boundary_perm, compose_factorization, necklace_from_perm,
                            parse_necklace, validate)

NECKLACE_47 = ["125", "235", "345", "456", "561", "671", "712"]


def test_boundary_perm_4_7():
    assert boundary_perm(4, 7).to_list() == [3, 4, 6, 8, 7, 9, 12]


def test_necklace_4_7():
    N = necklace_from_perm(boundary_perm(4, 7))
    assert N.labels() == NECKLACE_47
    assert validate(N) is True
    assert parse_necklace(NECKLACE_47, 7) == N


def test_perm_is_periodic():
    f = boundary_perm(4, 7)
    assert f(8) == f(1) + 7 and f(0) == f(7) - 7


@pytest.mark.parametrize("window,msg", [
    ([1, 2, 3, 11], "violates"),
    ([2, 2, 4, 4], "agree modulo"),
])
def test_validate_errors(window, msg):
    with pytest.raises(ValueError, match=msg):
        validate(BoundedAffinePermutation(window))


def test_validate_reports_k():
    assert validate(boundary_perm(3, 6)) == 3
    assert validate(BoundedAffinePermutation([1, 2, 3])) == 0


def test_bad_necklace():
    N = GrassmannNecklace([{1, 2}, {1, 3}, {3, 1}, {1, 2}], 4)
    with pytest.raises(ValueError):
        validate(N)


@pytest.mark.parametrize("n", range(5, 11))
def test_factorization_recomposes(n):
    for m in range(3, n - 1):
        g, word = bcfw_factorization(m, n)
        assert len(word) == 2 * n - 5
        assert compose_factorization(g, word) == boundary_perm(m, n)


def test_word_4_7_frozen():
    assert bcfw_word(4, 7) == [5, 6, 2, 3, 4, 5, 1, 2, 3]


def test_bcfw_matrix_entries():
    rows = bcfw_matrix(4, 7)
    assert rows[1][3].to_str() == "q2*q3 + q2*r3 + r2*r3"
    assert [e.to_str() for e in rows[2]] == ["0", "0", "0", "0", "1", "p5 + q5", "p5*p6"]
    assert list(bcfw_table(4, 7).names) == ["p5", "p6", "q2", "q3", "q4", "q5", "r1", "r2", "r3"]


@given(st.integers(6, 8), st.data())
@settings(max_examples=12, deadline=None)
def test_bcfw_positive_weights_land_in_positroid(n, data):
    m = data.draw(st.integers(3, n - 2))
    T = bcfw_table(m, n)
    pt = [mpq(data.draw(st.integers(1, 30)), data.draw(st.integers(1, 7))) for _ in T.names]
    M = RationalMatrix([[e.eval(pt) for e in r] for r in bcfw_matrix(m, n)])
    P = pluecker_of(M)
    assert is_tnn(P)
    N = necklace_from_perm(boundary_perm(m, n))
    # each necklace element is the lexicographically first nonzero basis from a
    for a in range(1, n + 1):
        assert P[tuple(sorted(N[a]))] != 0


def test_chart_coords_symbols():
    rules = bcfw_chart_coords(4, 7)
    assert sorted(rules) == sorted(f"{s}{i}" for s in ("alpha", "beta", "gamma") for i in range(1, 5))
    assert rules["alpha1"].is_zero()


def test_cyclic_rank_matrix_closure():
    R = CyclicRankMatrix.from_conditions(6, 3, [(2, 3, 1)])
    assert R[(2, 3)] == 1 and R[(2, 2)] == 1 and R[(1, 4)] == 2
    top = CyclicRankMatrix.from_conditions(6, 3, [])
    assert R <= top and not top <= R


def test_m_range_checked():
    with pytest.raises(ValueError):
        boundary_perm(2, 6)
