"""Las Vergnas external activity and the externally ordered poset of bases.

``A <=_Ext B`` is decided by the containment ``A ⊆ B ∪ Ext(B)``.  The
lexicographic characterisation in :func:`leq_ext_lex` is an independent
route used only to cross-check it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import ContractError, OrderError
from .matroid import Basis, Matroid

Relation = tuple[tuple[bool, ...], ...]
Cover = tuple[int, int]


@dataclass(frozen=True)
class ExternalData:
    basis: Basis
    active: frozenset[int]
    external: frozenset[int]

    @property
    def epsilon(self) -> int:
        return len(self.external)


def active_set(m: Matroid, a: Iterable[int]) -> frozenset[int]:
    """Elements that are the minimum of some circuit inside ``a ∪ {e}``."""
    a = frozenset(a)
    return frozenset(c[0] for c in m.circuits if a.issuperset(c[1:]))


def external_set(m: Matroid, a: Iterable[int]) -> frozenset[int]:
    a = frozenset(a)
    return active_set(m, a) - a


def external_data(m: Matroid, b: Iterable[int]) -> ExternalData:
    b = tuple(sorted(b))
    act = active_set(m, b)
    return ExternalData(b, act, act - frozenset(b))


def _require_basis(m: Matroid, *sets: Iterable[int]) -> None:
    for s in sets:
        if not m.is_basis(s):
            raise ContractError(f"{tuple(sorted(s))} is not a basis")


def leq_ext(m: Matroid, a: Iterable[int], b: Iterable[int]) -> bool:
    a, b = tuple(a), tuple(b)
    _require_basis(m, a, b)
    return set(a) <= set(b) | external_set(m, b)


def leq_ext_lex(m: Matroid, a: Iterable[int], b: Iterable[int]) -> bool:
    """``b`` is the lexicographically greatest basis inside ``a ∪ b``.

    Bases are compared as ascending tuples, first difference decides and the
    larger element wins.
    """
    a, b = tuple(sorted(a)), tuple(sorted(b))
    _require_basis(m, a, b)
    union = sorted(set(a) | set(b))
    best = max(s for s in combinations(union, m.rank) if m.is_basis(s))
    return best == b


def epsilon(m: Matroid, b: Iterable[int]) -> int:
    b = tuple(b)
    _require_basis(m, b)
    return len(external_set(m, b))


# -- posets -------------------------------------------------------------


def transitive_closure(covers: Iterable[Cover], size: int) -> Relation:
    """Reflexive-transitive closure (Warshall).  Cycles raise :class:`OrderError`."""
    r = [[i == j for j in range(size)] for i in range(size)]
    for i, j in covers:
        r[i][j] = True
    for k in range(size):
        rk = r[k]
        for i in range(size):
            if r[i][k]:
                ri = r[i]
                for j in range(size):
                    if rk[j]:
                        ri[j] = True
    for i in range(size):
        for j in range(i + 1, size):
            if r[i][j] and r[j][i]:
                raise OrderError(f"elements {i} and {j} lie on a cycle")
    return tuple(tuple(row) for row in r)


def check_partial_order(relation: Sequence[Sequence[bool]]) -> None:
    size = len(relation)
    for i in range(size):
        if not relation[i][i]:
            raise OrderError(f"relation is not reflexive at {i}")
        for j in range(size):
            if i != j and relation[i][j] and relation[j][i]:
                raise OrderError(f"relation is not antisymmetric at ({i}, {j})")
            if relation[i][j]:
                for k in range(size):
                    if relation[j][k] and not relation[i][k]:
                        raise OrderError(f"relation is not transitive at ({i}, {j}, {k})")


def transitive_reduction(relation: Sequence[Sequence[bool]]) -> list[Cover]:
    """Cover pairs ``(i, j)``: ``i < j`` with nothing strictly between."""
    check_partial_order(relation)
    size = len(relation)
    covers = []
    for i in range(size):
        for j in range(size):
            if i == j or not relation[i][j]:
                continue
            if not any(
                relation[i][k] and relation[k][j]
                for k in range(size) if k != i and k != j
            ):
                covers.append((i, j))
    return covers


@dataclass(frozen=True)
class BasisPoset:
    elements: tuple[Basis, ...]
    relation: Relation
    covers: tuple[Cover, ...]

    @classmethod
    def from_relation(cls, elements: Sequence[Basis], relation) -> BasisPoset:
        rel = tuple(tuple(bool(x) for x in row) for row in relation)
        if len(rel) != len(elements) or any(len(row) != len(rel) for row in rel):
            raise ContractError("relation matrix does not match the element list")
        return cls(tuple(elements), rel, tuple(transitive_reduction(rel)))

    @classmethod
    def from_covers(cls, elements: Sequence[Basis], covers: Iterable[Cover]) -> BasisPoset:
        covers = list(covers)
        rel = transitive_closure(covers, len(elements))
        return cls(tuple(elements), rel, tuple(transitive_reduction(rel)))

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, b: Iterable[int]) -> int:
        return self.elements.index(tuple(sorted(b)))

    def leq(self, a: Iterable[int], b: Iterable[int]) -> bool:
        return self.relation[self.index(a)][self.index(b)]

    def pairs(self, strict: bool = False) -> list[tuple[Basis, Basis]]:
        """Related pairs ``(a, b)`` with ``a <= b``."""
        e = self.elements
        return [(e[i], e[j]) for i, row in enumerate(self.relation)
                for j, x in enumerate(row) if x and not (strict and i == j)]

    def cover_pairs(self) -> list[tuple[Basis, Basis]]:
        return [(self.elements[i], self.elements[j]) for i, j in self.covers]

    def minimal(self) -> list[Basis]:
        n = len(self.elements)
        return [self.elements[j] for j in range(n)
                if not any(self.relation[i][j] for i in range(n) if i != j)]

    def maximal(self) -> list[Basis]:
        n = len(self.elements)
        return [self.elements[i] for i in range(n)
                if not any(self.relation[i][j] for j in range(n) if j != i)]

    def to_dict(self) -> dict:
        return {
            "elements": [list(b) for b in self.elements],
            "covers": [list(c) for c in self.covers],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> BasisPoset:
        try:
            elements = [tuple(b) for b in data["elements"]]
            covers = [tuple(c) for c in data["covers"]]
        except (KeyError, TypeError) as exc:
            raise ContractError(f"poset JSON needs elements and covers: {exc}") from None
        return cls.from_covers(elements, covers)


def external_poset(m: Matroid) -> BasisPoset:
    bases = m.bases
    closed = [set(b) | external_set(m, b) for b in bases]
    rel = [[set(a) <= closed[j] for j in range(len(bases))] for a in bases]
    return BasisPoset.from_relation(bases, rel)


def poset_equal(p1: BasisPoset, p2: BasisPoset) -> bool:
    """Same element set and same full relation, independent of element order."""
    if sorted(p1.elements) != sorted(p2.elements):
        return False
    return set(p1.pairs()) == set(p2.pairs())


def _label(b: Basis) -> str:
    return "{" + ",".join(map(str, b)) + "}"


def to_dot(
    p: BasisPoset,
    name: str = "ExP",
    colors: Mapping[int, str] | None = None,
) -> str:
    """Hasse diagram in Graphviz DOT, drawn bottom to top.

    Nodes are ``b0..bk`` in element order; ``colors`` optionally maps an
    element index to a Graphviz colour name.
    """
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for i, b in enumerate(p.elements):
        attrs = f'label="{_label(b)}"'
        if colors and i in colors:
            attrs += f", fontcolor={colors[i]}"
        lines.append(f"  b{i} [{attrs}];")
    for i, j in p.covers:
        lines.append(f"  b{i} -> b{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
