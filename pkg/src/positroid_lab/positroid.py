"""Unit interval positroids.

``uip`` goes through the matrix (antiadjacency, then ``psi``, then nonzero
maximal minors).  ``trivial_uip`` and ``trivial_circuits`` write down the
trivial case combinatorially; the two routes are kept side by side so each
can check the other.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import ContractError
from .linalg import psi
from .matroid import Circuit, Matroid, are_isomorphic, matroid_from_matrix, minor
from .uio import UnitIntervalOrder, antiadjacency, enumerate_uios, trivial_order


@dataclass(frozen=True)
class UnitIntervalPositroid:
    source: UnitIntervalOrder
    matroid: Matroid

    @property
    def n(self) -> int:
        return self.source.n

    def to_dict(self) -> dict:
        return {"profile": list(self.source.profile), "matroid": self.matroid.to_dict()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@lru_cache(maxsize=None)
def uip(u: UnitIntervalOrder) -> UnitIntervalPositroid:
    return UnitIntervalPositroid(u, matroid_from_matrix(psi(antiadjacency(u))))


def uip_catalog(n: int) -> list[UnitIntervalPositroid]:
    return [uip(u) for u in enumerate_uios(n)]


def trivial_uip_by_matrix(n: int) -> Matroid:
    return uip(trivial_order(n)).matroid


@lru_cache(maxsize=None)
def trivial_uip(n: int) -> Matroid:
    """Bases ``[n]`` and ``[n] - i + j`` for ``i`` in ``[n]``, ``j`` in ``[n+1, 2n]``."""
    if n < 1:
        raise ContractError(f"n must be >= 1, got {n}")
    core = set(range(1, n + 1))
    bases = [tuple(sorted(core))]
    for i in range(1, n + 1):
        for j in range(n + 1, 2 * n + 1):
            bases.append(tuple(sorted(core - {i} | {j})))
    return Matroid(2 * n, tuple(bases))


def trivial_circuits(n: int) -> list[Circuit]:
    """``[n] + j`` for each ``j`` in ``[n+1, 2n]`` plus every pair inside ``[n+1, 2n]``."""
    if n < 1:
        raise ContractError(f"n must be >= 1, got {n}")
    core = tuple(range(1, n + 1))
    out = [core + (j,) for j in range(n + 1, 2 * n + 1)]
    out += list(combinations(range(n + 1, 2 * n + 1), 2))
    return sorted(out)


@dataclass(frozen=True)
class MinorMatch:
    deleted: int
    contracted: int
    matches: tuple[tuple[int, ...], ...]

    def to_dict(self) -> dict:
        return {
            "delete": self.deleted,
            "contract": self.contracted,
            "isomorphic_to": [list(z) for z in self.matches],
        }


def minor_scan(u: UnitIntervalOrder) -> list[MinorMatch]:
    """Test every delete-``t``-then-contract-``s`` minor of ``uip(u)`` against the
    UIPs one rank down.

    ``t`` and ``s`` range over all ordered pairs of distinct ground elements;
    matches are reported by the zero profile of the smaller UIP.
    """
    if u.n < 2:
        raise ContractError("minor scan needs rank >= 2")
    m = uip(u).matroid
    smaller = uip_catalog(u.n - 1)
    out = []
    for t in m.elements:
        for s in m.elements:
            if s == t:
                continue
            v = minor(m, deleted=[t], contracted=[s])
            hits = tuple(p.source.profile for p in smaller if are_isomorphic(v, p.matroid))
            out.append(MinorMatch(t, s, hits))
    return out
