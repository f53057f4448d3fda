import json

import pytest
from hypothesis import given, settings, strategies as st

from abct.checks import cauchy_tp, random_kn_matrix
from abct.pluecker import (NotGrassmannianPoint, RationalMatrix, complement, cyclic_shift,
                           dihedral_flip, gale_dual, gale_identity_scalar, is_tnn, is_tp,
                           pluecker_of, projective_ratio, projectively_equal, sort_pair,
                           supermodularity_holds)
from oracles import minors

seeds = st.integers(0, 10 ** 6)


@given(seeds)
@settings(max_examples=25, deadline=None)
def test_pluecker_matches_leibniz(seed):
    M = random_kn_matrix(3, 6, seed)
    P = pluecker_of(M)
    assert {I: v for I, v in P.coords.items()} == minors(M)


def test_rank_deficient_matrix_is_rejected():
    with pytest.raises(NotGrassmannianPoint):
        pluecker_of(RationalMatrix([[1, 2, 3], [2, 4, 6]]))


def test_signed_coordinates_are_alternating():
    P = pluecker_of(RationalMatrix([[1, 0, 0, 1], [0, 1, 0, 2], [0, 0, 1, 3]]))
    assert P.signed((2, 1, 3)) == -P[(1, 2, 3)]
    assert P.signed((1, 1, 3)) == 0


@given(seeds)
@settings(max_examples=25, deadline=None)
def test_cyclic_shift_and_flip_preserve_positivity(seed):
    M = cauchy_tp(3, 7, seed)
    assert is_tp(pluecker_of(M))
    assert is_tp(pluecker_of(cyclic_shift(M)))
    # reversing the columns of a 3 x n matrix multiplies every minor by -1
    assert is_tp(pluecker_of(dihedral_flip(M)).normalized())


def test_projective_ratio():
    M = random_kn_matrix(3, 6, 4)
    N = M.left_multiply([[2, 0, 0], [0, 1, 0], [1, 0, 1]])
    assert projective_ratio(pluecker_of(M), pluecker_of(N)) == 2
    assert projectively_equal(pluecker_of(N), pluecker_of(M))


@pytest.mark.parametrize("k,n", [(2, 5), (3, 6), (3, 7), (4, 7)])
def test_gale_duality_is_projective_identity(k, n):
    for seed in range(10):
        M = random_kn_matrix(k, n, seed)
        D = gale_dual(M)
        assert (D.k, D.n) == (n - k, n)
        assert gale_identity_scalar(M) not in (None, 0)


def test_gale_dual_preserves_positivity():
    D = gale_dual(cauchy_tp(3, 7, 1))
    assert is_tp(pluecker_of(D).normalized())


def test_complement():
    assert complement((1, 3), 5) == (2, 4, 5)


def test_sort_pair_example():
    # I = 135, J = 246: min 135, max 246, sort1 = 135 (a's), sort2 = 246
    assert sort_pair((1, 3, 5), (2, 4, 6)) == ((1, 3, 5), (2, 4, 6), (1, 3, 5), (2, 4, 6))
    assert sort_pair((1, 5, 6), (2, 3, 4)) == ((1, 3, 4), (2, 5, 6), (1, 3, 5), (2, 4, 6))


def test_sort_pair_rotated_order():
    # in the order 3 < 4 < 1 < 2 the pair 34 comes first
    assert sort_pair((1, 2), (3, 4))[:2] == ((1, 2), (3, 4))
    assert sort_pair((1, 2), (3, 4), offset=2, n=4)[:2] == ((3, 4), (1, 2))


@given(seeds, st.integers(0, 6))
@settings(max_examples=20, deadline=None)
def test_supermodularity_on_tp_points(seed, offset):
    P = pluecker_of(cauchy_tp(3, 6, seed))
    keys = sorted(P.coords)
    for I in keys[::3]:
        for J in keys[1::4]:
            assert supermodularity_holds(P, I, J, offset)


def test_supermodularity_refuses_non_tnn():
    P = pluecker_of(RationalMatrix([[1, 0, 0, -1], [0, 1, 0, 1], [0, 0, 1, 1]]))
    assert not is_tnn(P)
    with pytest.raises(ValueError):
        supermodularity_holds(P, (1, 2, 3), (2, 3, 4))


def test_matrix_json_roundtrip():
    M = RationalMatrix([["1/2", 0, 3], [1, "-2/3", 5]])
    obj = json.loads(json.dumps(M.to_json()))
    assert obj == {"k": 2, "n": 3, "entries": [["1/2", "0", "3"], ["1", "-2/3", "5"]]}
    assert RationalMatrix.from_json(obj) == M
