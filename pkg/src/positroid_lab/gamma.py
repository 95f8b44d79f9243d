"""The three-step recursion taking Ex(P_n) to Ex(P_{n+1}) for trivial UIPs.

Step 1 (reinforce) shifts every basis up by one and puts its old minimum
back.  Step 2 (build up) swaps ``2n+1`` for ``2n+2``; the result covers its
parent.  Step 3 (grow spine) swaps ``2`` for ``1`` in bases whose minimum is
``2``; the result is covered by its parent.

Relations among the new elements come from three places:

* step-1 images keep the order of their sources in Ex(P_n);
* each step-2 or step-3 image sits directly above or below its parent;
* images produced by the same step are ordered like their parents, with
  parents compared in the order accumulated so far.

:func:`verify_recursion` checks the outcome against the brute-force
external order.
"""

from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass, field

from .errors import ContractError
from .external import BasisPoset, external_poset, leq_ext, poset_equal, to_dot
from .matroid import Basis
from .positroid import trivial_uip

log = logging.getLogger(__name__)

STEP_COLORS = {1: "blue", 2: "red", 3: "olive"}


def reinforce(b, n: int | None = None) -> Basis:
    b = tuple(sorted(b))
    if not b:
        raise ContractError("cannot reinforce the empty set")
    if n is not None and not trivial_uip(n).is_basis(b):
        raise ContractError(f"{b} is not a basis of the rank-{n} trivial UIP")
    return tuple(sorted({x + 1 for x in b} | {b[0]}))


def build_up(b, n: int) -> Basis | None:
    b = set(b)
    if 2 * n + 1 not in b:
        return None
    return tuple(sorted(b - {2 * n + 1} | {2 * n + 2}))


def grow_spine(b) -> Basis | None:
    """Swap 2 for 1 when 2 is the minimum; ``None`` otherwise."""
    b = tuple(sorted(b))
    if not b or b[0] != 2:
        return None
    return (1,) + b[1:]


@dataclass(frozen=True)
class GammaTrace:
    n: int
    step1_map: dict[Basis, Basis]
    step2_map: dict[Basis, Basis]
    step3_map: dict[Basis, Basis]
    induced: BasisPoset

    def step_of(self, b: Basis) -> int:
        if b in self.step3_map.values():
            return 3
        if b in self.step2_map.values():
            return 2
        return 1

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "poset": self.induced.to_dict(),
            "steps": [self.step_of(b) for b in self.induced.elements],
            "step1": [[list(k), list(v)] for k, v in sorted(self.step1_map.items())],
            "step2": [[list(k), list(v)] for k, v in sorted(self.step2_map.items())],
            "step3": [[list(k), list(v)] for k, v in sorted(self.step3_map.items())],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_dot(self) -> str:
        colors = {i: STEP_COLORS[self.step_of(b)]
                  for i, b in enumerate(self.induced.elements)}
        return to_dot(self.induced, name=f"GammaP{self.n + 1}", colors=colors)


def _closure(pairs: set[tuple[Basis, Basis]], elements: list[Basis]) -> set[tuple[Basis, Basis]]:
    """Reflexive-transitive closure of a relation on basis labels."""
    idx = {b: i for i, b in enumerate(elements)}
    poset = BasisPoset.from_covers(elements, [(idx[a], idx[b]) for a, b in pairs])
    return set(poset.pairs())


def _inherit(images: dict[Basis, Basis], order: set[tuple[Basis, Basis]]):
    return {(images[x], images[y]) for x in images for y in images if (x, y) in order}


def gamma(ex_pn: BasisPoset, n: int) -> GammaTrace:
    if len(ex_pn) != n * n + 1 or any(len(b) != n for b in ex_pn.elements):
        raise ContractError(
            f"expected the {n * n + 1} rank-{n} bases of Ex(P_{n}), got {len(ex_pn)}"
        )
    step1 = {b: reinforce(b) for b in ex_pn.elements}
    elements = sorted(step1.values())
    order = _closure({(step1[a], step1[b]) for a, b in ex_pn.pairs()}, elements)

    step2 = {x: y for x in elements if (y := build_up(x, n)) is not None}
    elements = sorted(set(elements) | set(step2.values()))
    order = _closure(order | set(step2.items()) | _inherit(step2, order), elements)

    step3 = {x: y for x in elements if (y := grow_spine(x)) is not None}
    elements = sorted(set(elements) | set(step3.values()))
    order = _closure(
        order | {(y, x) for x, y in step3.items()} | _inherit(step3, order), elements
    )

    idx = {b: i for i, b in enumerate(elements)}
    rel = [[False] * len(elements) for _ in elements]
    for a, b in order:
        rel[idx[a]][idx[b]] = True
    return GammaTrace(n, step1, step2, step3, BasisPoset.from_relation(elements, rel))


@dataclass
class RecursionReport:
    n: int
    equal: bool
    elements: int
    covers_gamma: int
    covers_oracle: int
    missing_relations: list = field(default_factory=list)
    extra_relations: list = field(default_factory=list)
    order_preserved: bool = True

    @property
    def ok(self) -> bool:
        return self.equal and self.order_preserved and self.elements == (self.n + 1) ** 2 + 1

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def verify_recursion(n: int) -> RecursionReport:
    """Compare gamma(Ex(P_n)) with Ex(P_{n+1}) computed from scratch."""
    ex_n = external_poset(trivial_uip(n))
    trace = gamma(ex_n, n)
    target_matroid = trivial_uip(n + 1)
    oracle = external_poset(target_matroid)

    got, want = set(trace.induced.pairs()), set(oracle.pairs())
    preserved = all(
        leq_ext(target_matroid, reinforce(a), reinforce(b)) for a, b in ex_n.pairs()
    )
    report = RecursionReport(
        n=n,
        equal=poset_equal(trace.induced, oracle),
        elements=len(trace.induced),
        covers_gamma=len(trace.induced.covers),
        covers_oracle=len(oracle.covers),
        missing_relations=[[list(a), list(b)] for a, b in sorted(want - got)],
        extra_relations=[[list(a), list(b)] for a, b in sorted(got - want)],
        order_preserved=preserved,
    )
    if not report.ok:
        log.warning("recursion check failed at n=%d: %s", n, report.to_json())
    return report
