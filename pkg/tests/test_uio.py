from fractions import Fraction
from itertools import combinations, combinations_with_replacement

import pytest
from hypothesis import given
from hypothesis import strategies as st

from positroid_lab.errors import ContractError, LabelingError
from positroid_lab.linalg import RationalMatrix, minor
from positroid_lab.uio import (
    UnitIntervalOrder,
    antiadjacency,
    catalan,
    catalan_by_convolution,
    enumerate_uios,
    interval_realization,
    trivial_order,
    uio_from_intervals,
)


@pytest.mark.parametrize("n, want", [(0, 1), (1, 1), (2, 2), (3, 5), (4, 14), (10, 16796)])
def test_catalan_values(n, want):
    assert catalan(n) == want


def test_catalan_closed_form_matches_convolution():
    assert catalan_by_convolution(20) == [catalan(n) for n in range(21)]


def test_catalan_negative():
    with pytest.raises(ContractError):
        catalan(-1)


def test_enumerate_small():
    assert [u.profile for u in enumerate_uios(1)] == [(0,)]
    assert [u.profile for u in enumerate_uios(3)] == [
        (0, 0, 0), (1, 0, 0), (1, 1, 0), (2, 0, 0), (2, 1, 0)
    ]


@pytest.mark.parametrize("n", range(1, 8))
def test_enumeration_count_is_catalan(n):
    us = enumerate_uios(n)
    assert len(us) == catalan(n)
    assert [u.profile for u in us] == sorted(u.profile for u in us)
    assert len(set(us)) == len(us)


def _orders_by_brute_force(n):
    """Zero profiles of every unit interval order on [n], found by trying all
    interval placements on a coarse grid and keeping properly labelled ones."""
    grid = [Fraction(k, 3) for k in range(5 * n)]
    return sorted({uio_from_intervals(q).profile
                   for q in combinations_with_replacement(grid, n)})


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_enumeration_matches_interval_placements(n):
    assert [u.profile for u in enumerate_uios(n)] == _orders_by_brute_force(n)


def test_invalid_profiles():
    for bad in [(), (1,), (0, 1), (2, 0), (1, 2, 0)]:
        with pytest.raises(ContractError):
            UnitIntervalOrder(bad)


def test_antiadjacency_examples():
    assert antiadjacency(trivial_order(3)) == RationalMatrix.ones(3)
    assert antiadjacency(UnitIntervalOrder((1, 1, 1, 0))) == RationalMatrix.from_rows(
        [[1, 1, 1, 0], [1, 1, 1, 0], [1, 1, 1, 0], [1, 1, 1, 1]]
    )
    assert antiadjacency(UnitIntervalOrder((1, 0))) == RationalMatrix.from_rows([[1, 0], [1, 1]])


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_antiadjacency_zeros_are_relations(n):
    for u in enumerate_uios(n):
        a = antiadjacency(u)
        zeros = {(i + 1, j + 1) for i in range(n) for j in range(n) if a[i, j] == 0}
        assert zeros == set(u.relations())


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_antiadjacency_totally_nonnegative(n):
    for u in enumerate_uios(n):
        a = antiadjacency(u)
        for k in range(1, n + 1):
            for rows in combinations(range(1, n + 1), k):
                for cols in combinations(range(1, n + 1), k):
                    assert minor(a, rows, cols) >= 0


def test_from_intervals_examples():
    assert uio_from_intervals([0, 0, 0]).profile == (0, 0, 0)
    assert uio_from_intervals([0, 2, 4]).profile == (2, 1, 0)
    # 0 + 1 < 1.6 and 0.5 + 1 < 1.6, but 0 + 1 < 0.5 fails
    assert uio_from_intervals([0, 0.5, 1.6]).profile == (1, 1, 0)
    assert uio_from_intervals([0, Fraction(1, 2), Fraction(7, 5)]).profile == (1, 0, 0)


def test_from_intervals_boundary_is_not_a_relation():
    # q_i + 1 == q_j: closed intervals touch, so the elements are incomparable
    assert uio_from_intervals([0, 1]).profile == (0, 0)


def test_from_intervals_unsorted():
    with pytest.raises(LabelingError):
        uio_from_intervals([1, 0])


@pytest.mark.parametrize("n", range(1, 7))
def test_realization_round_trips(n):
    for u in enumerate_uios(n):
        q = interval_realization(u)
        assert uio_from_intervals(q) == u


@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=8), min_size=1, max_size=7))
def test_sorted_intervals_always_give_valid_profile(q):
    u = uio_from_intervals(sorted(q))
    s = sorted(q)
    assert set(u.relations()) == {
        (i + 1, j + 1) for i in range(len(s)) for j in range(len(s)) if s[i] + 1 < s[j]
    }


def test_json():
    u = UnitIntervalOrder((1, 1, 1, 0))
    assert u.to_json() == '{"n": 4, "profile": [1, 1, 1, 0]}'
    assert UnitIntervalOrder.from_dict(u.to_dict()) == u
    with pytest.raises(ContractError):
        UnitIntervalOrder.from_dict({"n": 3, "profile": [0, 0]})
