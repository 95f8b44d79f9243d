import pytest

from positroid_lab.linalg import RationalMatrix, maximal_minors, psi
from positroid_lab.matroid import circuits
from positroid_lab.positroid import (
    minor_scan,
    trivial_circuits,
    trivial_uip,
    trivial_uip_by_matrix,
    uip,
    uip_catalog,
)
from positroid_lab.uio import UnitIntervalOrder, antiadjacency, enumerate_uios, trivial_order

P3_BASES = (
    (1, 2, 3), (1, 2, 4), (1, 2, 5), (1, 2, 6), (1, 3, 4),
    (1, 3, 5), (1, 3, 6), (2, 3, 4), (2, 3, 5), (2, 3, 6),
)


def test_uip_trivial_examples():
    assert uip(trivial_order(2)).matroid.bases == ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4))
    assert uip(trivial_order(3)).matroid.bases == P3_BASES


def test_uip_chain_of_two():
    # psi([[1,0],[1,1]]) = [[1,0,-1,-1],[0,1,1,0]]; minor {1,4} = 0, all others nonzero
    p = uip(UnitIntervalOrder((1, 0)))
    assert p.matroid.bases == ((1, 2), (1, 3), (2, 3), (2, 4), (3, 4))
    assert p.matroid != trivial_uip(2)


def test_trivial_uip_examples():
    assert trivial_uip(1).bases == ((1,), (2,))
    assert trivial_uip(2).bases == ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4))
    assert trivial_uip(3).bases == P3_BASES


@pytest.mark.parametrize("n", range(1, 7))
def test_direct_and_matrix_routes_agree(n):
    direct = trivial_uip(n)
    assert len(direct.bases) == n * n + 1
    assert direct.to_json() == trivial_uip_by_matrix(n).to_json()


def test_trivial_circuits_examples():
    assert trivial_circuits(1) == [(1, 2)]
    assert trivial_circuits(2) == [(1, 2, 3), (1, 2, 4), (3, 4)]
    assert trivial_circuits(3) == [(1, 2, 3, 4), (1, 2, 3, 5), (1, 2, 3, 6), (4, 5), (4, 6), (5, 6)]


@pytest.mark.parametrize("n", range(1, 6))
def test_trivial_circuits_match_computed(n):
    tc = trivial_circuits(n)
    assert len(tc) == n + n * (n - 1) // 2
    assert circuits(trivial_uip(n)) == tc


def test_trivial_psi_matrix_shape():
    # right block: equal columns, rows alternate in sign from the bottom
    for n in range(1, 6):
        b = psi(RationalMatrix.ones(n))
        for i in range(n):
            assert all(b[i, n + j] == (-1) ** (n - 1 - i) for j in range(n))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_catalog_rank_and_distinct(n):
    cat = uip_catalog(n)
    assert all(p.matroid.rank == n and p.matroid.ground == 2 * n for p in cat)
    assert len({p.matroid for p in cat}) == len(cat)


def test_uip_bases_are_nonzero_minors():
    for u in enumerate_uios(3):
        minors = maximal_minors(psi(antiadjacency(u)))
        assert uip(u).matroid.bases == tuple(k for k, v in minors.items() if v != 0)


def test_uip_json():
    p = uip(trivial_order(2))
    assert p.to_dict() == {
        "profile": [0, 0],
        "matroid": {"ground": 4, "rank": 2, "bases": [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4]]},
    }


def test_minor_scan_trivial_p4():
    scan = minor_scan(trivial_order(4))
    assert len(scan) == 8 * 7
    hits = {(e.deleted, e.contracted) for e in scan if e.matches}
    # deleting a repeated column and contracting an identity column leaves P_3
    assert hits == {(t, s) for t in range(5, 9) for s in range(1, 5)}
    assert all(e.matches == ((0, 0, 0),) for e in scan if e.matches)
