"""Unit interval orders and Catalan numbers.

A properly labelled unit interval order on ``[n]`` is identified with the
staircase of zeros in its antiadjacency matrix.  Row ``i`` ends in
``z_i`` zeros, one for each ``j`` with ``i <_P j``; the zero profile
``(z_1, ..., z_n)`` is weakly decreasing with ``z_i <= n - i``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import ContractError, LabelingError
from .linalg import RationalMatrix, to_fraction


def catalan(n: int) -> int:
    if n < 0:
        raise ContractError(f"catalan index must be >= 0, got {n}")
    return comb(2 * n, n) // (n + 1)


def catalan_by_convolution(n: int) -> list[int]:
    """``C_0..C_n`` from ``C_{m+1} = sum_k C_k C_{m-k}``."""
    c = [1]
    for m in range(n):
        c.append(sum(c[k] * c[m - k] for k in range(m + 1)))
    return c


@dataclass(frozen=True)
class UnitIntervalOrder:
    profile: tuple[int, ...]

    def __post_init__(self):
        z = tuple(int(x) for x in self.profile)
        object.__setattr__(self, "profile", z)
        n = len(z)
        if n == 0:
            raise ContractError("a unit interval order needs at least one element")
        for i, zi in enumerate(z, start=1):
            if not 0 <= zi <= n - i:
                raise ContractError(f"z_{i} = {zi} is outside [0, {n - i}]")
        if any(a < b for a, b in zip(z, z[1:])):
            raise ContractError(f"profile {z} is not weakly decreasing")

    @property
    def n(self) -> int:
        return len(self.profile)

    @property
    def is_trivial(self) -> bool:
        return not any(self.profile)

    def relations(self) -> list[tuple[int, int]]:
        """Strict relations ``(i, j)`` with ``i <_P j``."""
        n = self.n
        return [(i, j) for i, z in enumerate(self.profile, start=1)
                for j in range(n - z + 1, n + 1)]

    def less(self, i: int, j: int) -> bool:
        return j > self.n - self.profile[i - 1]

    def to_dict(self) -> dict:
        return {"n": self.n, "profile": list(self.profile)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> UnitIntervalOrder:
        try:
            u = cls(tuple(data["profile"]))
        except (KeyError, TypeError) as exc:
            raise ContractError(f"UIO JSON needs a profile list: {exc}") from None
        if "n" in data and data["n"] != u.n:
            raise ContractError(f"declared n = {data['n']} but profile has length {u.n}")
        return u


def trivial_order(n: int) -> UnitIntervalOrder:
    return UnitIntervalOrder((0,) * n)


def _profiles(n: int) -> Iterator[tuple[int, ...]]:
    def walk(i: int, cap: int, prefix: tuple[int, ...]):
        if i > n:
            yield prefix
            return
        for z in range(min(cap, n - i) + 1):
            yield from walk(i + 1, z, prefix + (z,))
    yield from walk(1, n - 1, ())


def enumerate_uios(n: int) -> list[UnitIntervalOrder]:
    """Every unit interval order on ``[n]``, profiles in lexicographic order."""
    if n < 1:
        raise ContractError(f"n must be >= 1, got {n}")
    return [UnitIntervalOrder(z) for z in _profiles(n)]


def antiadjacency(u: UnitIntervalOrder) -> RationalMatrix:
    n = u.n
    return RationalMatrix.from_rows(
        [[1] * (n - z) + [0] * z for z in u.profile]
    )


def uio_from_intervals(q: Sequence) -> UnitIntervalOrder:
    """Order of the unit intervals ``[q_i, q_i + 1]``: ``i < j`` iff ``q_i + 1 < q_j``.

    Left endpoints must be weakly increasing, which is what makes the
    labelling proper.
    """
    q = [to_fraction(x) for x in q]
    if any(a > b for a, b in zip(q, q[1:])):
        raise LabelingError(f"left endpoints {[str(x) for x in q]} are not sorted")
    n = len(q)
    profile = []
    for i in range(n):
        above = [j for j in range(n) if q[i] + 1 < q[j]]
        if above != list(range(n - len(above), n)):
            raise LabelingError(f"relations of element {i + 1} are not right-justified")
        profile.append(len(above))
    return UnitIntervalOrder(tuple(profile))


def interval_realization(u: UnitIntervalOrder) -> list[Fraction]:
    """Strictly increasing left endpoints of a unit interval representation of ``u``.

    The elements below ``j`` are exactly ``1..b`` for some ``b``, so ``q_j``
    must lie in ``(q_b + 1, q_{b+1} + 1]`` and above ``q_{j-1}``.  Taking the
    midpoint of that window keeps every later window nonempty.
    """
    q: list[Fraction] = []
    for j in range(1, u.n + 1):
        b = sum(1 for i in range(1, j) if u.less(i, j))
        lo = [q[-1]] if q else []
        if b:
            lo.append(q[b - 1] + 1)
        hi = q[b] + 1 if b < j - 1 else None
        if not lo:
            q.append(Fraction(0))
        elif hi is None:
            q.append(max(lo) + 1)
        else:
            q.append((max(lo) + hi) / 2)
    return q


def parse_profile(tokens: Iterable[str]) -> UnitIntervalOrder:
    return UnitIntervalOrder(tuple(int(t) for t in tokens))
