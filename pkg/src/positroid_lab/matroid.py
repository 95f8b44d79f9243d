"""Matroids stored as explicit basis lists.

Ground elements are ``1..ground``.  Bases and circuits are sorted tuples and
the basis list itself is kept in lexicographic order, so two matroids with
the same labelled bases compare equal and serialise identically.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, permutations, product
from typing import Iterable

from .errors import AxiomError, ContractError
from .linalg import RationalMatrix, maximal_minors, rank as matrix_rank

Basis = tuple[int, ...]
Circuit = tuple[int, ...]


def _canon(s: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(s)))


@dataclass(frozen=True)
class Matroid:
    ground: int
    bases: tuple[Basis, ...]
    _independent: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "bases", tuple(sorted({_canon(b) for b in self.bases})))
        _validate(self.ground, self.bases)
        indep = set()
        for b in self.bases:
            for k in range(len(b) + 1):
                indep.update(combinations(b, k))
        object.__setattr__(self, "_independent", frozenset(indep))

    @property
    def rank(self) -> int:
        return len(self.bases[0])

    @property
    def elements(self) -> range:
        return range(1, self.ground + 1)

    def is_basis(self, s: Iterable[int]) -> bool:
        return _canon(s) in self.basis_set

    @cached_property
    def basis_set(self) -> frozenset[Basis]:
        return frozenset(self.bases)

    @cached_property
    def circuits(self) -> tuple[Circuit, ...]:
        return tuple(circuits(self))

    def to_dict(self) -> dict:
        return {
            "ground": self.ground,
            "rank": self.rank,
            "bases": [list(b) for b in self.bases],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> Matroid:
        try:
            m = matroid_from_bases(data["ground"], data["bases"])
        except (KeyError, TypeError) as exc:
            raise ContractError(f"matroid JSON needs ground and bases: {exc}") from None
        if "rank" in data and data["rank"] != m.rank:
            raise ContractError(f"declared rank {data['rank']} but bases have size {m.rank}")
        return m

    @classmethod
    def from_json(cls, text: str) -> Matroid:
        return cls.from_dict(json.loads(text))


def _validate(ground: int, bases: tuple[Basis, ...]) -> None:
    if not bases:
        raise AxiomError("(B1) violated: the basis collection is empty")
    r = len(bases[0])
    for b in bases:
        if len(b) != r:
            raise AxiomError(f"bases {bases[0]} and {b} have different sizes")
        if b and (b[0] < 1 or b[-1] > ground):
            raise ContractError(f"basis {b} leaves the ground set [1, {ground}]")
    basis_set = set(bases)
    for b1 in bases:
        for b2 in bases:
            s1, s2 = set(b1), set(b2)
            for x in s1 - s2:
                if not any(_canon(s1 - {x} | {y}) in basis_set for y in s2 - s1):
                    raise AxiomError(
                        f"(B2) violated: no exchange for {x} between {b1} and {b2}"
                    )


def matroid_from_bases(ground: int, bases: Iterable[Iterable[int]]) -> Matroid:
    return Matroid(ground, tuple(_canon(b) for b in bases))


def matroid_from_matrix(m: RationalMatrix) -> Matroid:
    """Column matroid of a full-row-rank matrix."""
    if matrix_rank(m) != m.rows:
        raise ContractError(f"{m.rows}x{m.cols} matrix is not of full row rank")
    minors = maximal_minors(m)
    return Matroid(m.cols, tuple(cols for cols, v in minors.items() if v != 0))


def free_matroid(ground: int, rank: int | None = None) -> Matroid:
    """Uniform matroid ``U(rank, ground)``; the free matroid when ``rank`` is omitted."""
    r = ground if rank is None else rank
    return Matroid(ground, tuple(combinations(range(1, ground + 1), r)))


def _check_elements(m: Matroid, s: Iterable[int]) -> tuple[int, ...]:
    s = _canon(s)
    if s and (s[0] < 1 or s[-1] > m.ground):
        raise ContractError(f"{s} is not a subset of [1, {m.ground}]")
    return s


def is_independent(m: Matroid, s: Iterable[int]) -> bool:
    return _check_elements(m, s) in m._independent


def circuits(m: Matroid) -> list[Circuit]:
    """All minimal dependent sets, in lexicographic order.

    Only subsets of size at most ``rank + 1`` are scanned: every set that
    large is already dependent, so no circuit can be bigger.
    """
    found = []
    for k in range(1, m.rank + 2):
        for s in combinations(m.elements, k):
            if s in m._independent:
                continue
            if all(sub in m._independent for sub in combinations(s, k - 1)):
                found.append(s)
    return sorted(found)


def _relabel_without(m: Matroid, e: int) -> dict[int, int]:
    return {x: (x if x < e else x - 1) for x in m.elements if x != e}


def delete(m: Matroid, e: int) -> tuple[Matroid, dict[int, int]]:
    """Delete ``e``; returns the minor on ``[ground-1]`` and the old->new label map.

    If ``e`` is a coloop the bases become ``B - e``, which keeps the
    operation total.
    """
    _check_elements(m, [e])
    relabel = _relabel_without(m, e)
    kept = [b for b in m.bases if e not in b]
    if not kept:
        kept = [tuple(x for x in b if x != e) for b in m.bases]
    new = Matroid(m.ground - 1, tuple(tuple(relabel[x] for x in b) for b in kept))
    return new, relabel


def contract(m: Matroid, e: int) -> tuple[Matroid, dict[int, int]]:
    """Contract ``e``; a loop is deleted instead."""
    _check_elements(m, [e])
    containing = [b for b in m.bases if e in b]
    if not containing:
        return delete(m, e)
    relabel = _relabel_without(m, e)
    new = Matroid(
        m.ground - 1,
        tuple(tuple(relabel[x] for x in b if x != e) for b in containing),
    )
    return new, relabel


def minor(m: Matroid, deleted: Iterable[int] = (), contracted: Iterable[int] = ()) -> Matroid:
    """Delete then contract, with both sets named in ``m``'s own labels."""
    deleted, contracted = _canon(deleted), _canon(contracted)
    if set(deleted) & set(contracted):
        raise ContractError("an element cannot be both deleted and contracted")
    labels = {x: x for x in m.elements}
    for op, elems in ((delete, deleted), (contract, contracted)):
        for e in elems:
            m, relabel = op(m, labels[e])
            labels = {x: relabel[y] for x, y in labels.items() if y in relabel}
    return m


def _element_degrees(m: Matroid) -> list[int]:
    deg = [0] * (m.ground + 1)
    for b in m.bases:
        for x in b:
            deg[x] += 1
    return deg


def are_isomorphic(m1: Matroid, m2: Matroid) -> bool:
    """Brute-force search for a ground-set bijection carrying bases onto bases.

    Permutations are restricted to ones preserving how many bases each element
    lies in, which is an isomorphism invariant.  Meant for ground sets up to
    about 8 elements.
    """
    if (m1.ground, m1.rank, len(m1.bases)) != (m2.ground, m2.rank, len(m2.bases)):
        return False
    d1, d2 = _element_degrees(m1), _element_degrees(m2)
    if sorted(d1[1:]) != sorted(d2[1:]):
        return False
    classes: dict[int, tuple[list[int], list[int]]] = {}
    for x in m1.elements:
        classes.setdefault(d1[x], ([], []))[0].append(x)
        classes.setdefault(d2[x], ([], []))[1].append(x)
    groups = [classes[d] for d in sorted(classes)]
    target = m2.basis_set
    for choice in product(*(permutations(dst) for _, dst in groups)):
        phi = {}
        for (src, _), dst in zip(groups, choice):
            phi.update(zip(src, dst))
        if all(_canon(phi[x] for x in b) in target for b in m1.bases):
            return True
    return False
