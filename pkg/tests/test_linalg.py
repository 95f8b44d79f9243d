from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import cofactor_det
from positroid_lab.errors import ContractError, DimensionError
from positroid_lab.linalg import (
    RationalMatrix,
    det,
    is_positroid_matrix,
    k_set,
    maximal_minors,
    minor,
    psi,
    rank,
)
from positroid_lab.uio import antiadjacency, enumerate_uios

P2_MATRIX = RationalMatrix.from_rows([[1, 0, -1, -1], [0, 1, 1, 1]])


def int_matrices(max_n=5, lo=-3, hi=3):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n
        )
    )


def test_det_identity():
    assert det(RationalMatrix.identity(2)) == 1


def test_det_frozen_against_cofactor():
    rows = [[2, -1, 0, 3], [1, 3, -2, 1], [0, 2, 1, -1], [3, 0, 1, 2]]
    # value from the cofactor oracle
    assert det(RationalMatrix.from_rows(rows)) == -25


def test_det_needs_pivot_swap():
    assert det(RationalMatrix.from_rows([[0, 1], [1, 0]])) == -1
    assert det(RationalMatrix.from_rows([[0, 0], [1, 0]])) == 0


def test_det_rational_entries():
    m = RationalMatrix.from_rows([["1/2", "1/3"], ["1/4", "1/5"]])
    assert det(m) == Fraction(1, 10) - Fraction(1, 12)


@settings(max_examples=200, deadline=None)
@given(int_matrices())
def test_det_matches_cofactor(rows):
    assert det(RationalMatrix.from_rows(rows)) == cofactor_det(rows)


def test_det_rejects_non_square():
    with pytest.raises(DimensionError):
        det(P2_MATRIX)


def test_p2_minors():
    minors = maximal_minors(P2_MATRIX)
    assert minors[(1, 2)] == 1
    assert minors[(3, 4)] == 0
    assert sorted(k for k, v in minors.items() if v) == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]


def test_square_matrix_has_single_maximal_minor():
    m = RationalMatrix.from_rows([[1, 2], [3, 4]])
    assert maximal_minors(m) == {(1, 2): Fraction(-2)}


def test_psi_all_ones_3_has_ten_nonzero_minors():
    minors = maximal_minors(psi(RationalMatrix.ones(3)))
    assert sum(1 for v in minors.values() if v) == 10


def test_maximal_minors_rejects_tall():
    with pytest.raises(DimensionError):
        maximal_minors(RationalMatrix.from_rows([[1], [2]]))


def test_is_positroid_matrix():
    assert is_positroid_matrix(psi(RationalMatrix.ones(2)))
    assert not is_positroid_matrix(RationalMatrix.from_rows([[1, 0], [0, -1]]))
    assert not is_positroid_matrix(RationalMatrix.from_rows([[1, 1], [1, 1]]))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_psi_of_every_antiadjacency_is_positroid(n):
    for u in enumerate_uios(n):
        b = psi(antiadjacency(u))
        assert b.columns(range(1, n + 1)) == RationalMatrix.identity(n)
        assert is_positroid_matrix(b)


def test_psi_examples():
    assert psi(RationalMatrix.ones(2)) == P2_MATRIX
    assert psi(RationalMatrix.ones(1)) == RationalMatrix.from_rows([[1, 1]])
    right = psi(RationalMatrix.ones(3)).columns([4, 5, 6])
    assert right == RationalMatrix.from_rows([[1, 1, 1], [-1, -1, -1], [1, 1, 1]])


def test_psi_rejects_non_square():
    with pytest.raises(DimensionError):
        psi(P2_MATRIX)


def test_k_set_examples():
    assert k_set({1}, {2}, 2) == (1, 4)
    assert k_set({1, 2}, {1, 2}, 2) == (3, 4)
    assert k_set(set(), set(), 3) == (1, 2, 3)
    with pytest.raises(ContractError):
        k_set({1, 3}, {2}, 3)


@settings(max_examples=60, deadline=None)
@given(int_matrices(max_n=4))
def test_psi_minor_identity(rows):
    a = RationalMatrix.from_rows(rows)
    n = a.rows
    b = psi(a)
    full = range(1, n + 1)
    for k in range(n + 1):
        for i_set in combinations(full, k):
            for j_set in combinations(full, k):
                assert minor(a, i_set, j_set) == minor(b, full, k_set(i_set, j_set, n))


def test_rank():
    assert rank(P2_MATRIX) == 2
    assert rank(RationalMatrix.from_rows([[1, 2, 3], [2, 4, 6]])) == 1
    assert rank(RationalMatrix.from_rows([[0, 0], [0, 0]])) == 0


def test_json_round_trip():
    m = RationalMatrix.from_rows([[1, "-2/3"], [0, 5]])
    d = m.to_dict()
    assert d == {"rows": 2, "cols": 2, "entries": [[1, "-2/3"], [0, 5]]}
    assert RationalMatrix.from_json(m.to_json()) == m


def test_json_shape_mismatch():
    with pytest.raises(DimensionError):
        RationalMatrix.from_dict({"rows": 3, "cols": 2, "entries": [[1, 2], [3, 4]]})
    with pytest.raises(DimensionError):
        RationalMatrix.from_rows([[1, 2], [3]])
