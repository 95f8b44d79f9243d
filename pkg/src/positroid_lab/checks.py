"""Acceptance checks shared by ``positroid-lab verify`` and the test suite.

Each check returns a :class:`CheckResult`; none of them raise on a failed
property, so a caller can run all of them and report every failure.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass
from importlib import resources
from itertools import combinations
from typing import Callable

from .external import (
    active_set,
    epsilon,
    external_poset,
    external_set,
    leq_ext,
    leq_ext_lex,
    to_dot,
)
from .gamma import reinforce, verify_recursion
from .linalg import RationalMatrix, k_set, minor, psi
from .matroid import circuits
from .positroid import (
    minor_scan,
    trivial_circuits,
    trivial_uip,
    trivial_uip_by_matrix,
    uip_catalog,
)
from .uio import (
    UnitIntervalOrder,
    catalan,
    catalan_by_convolution,
    enumerate_uios,
    trivial_order,
)

# basis -> (active, external) for the rank-3 trivial UIP
P3_TABLE = {
    (1, 2, 3): ((), ()),
    (1, 2, 4): ((), ()),
    (1, 2, 5): ((4,), (4,)),
    (1, 2, 6): ((4, 5), (4, 5)),
    (1, 3, 4): ((), ()),
    (1, 3, 5): ((4,), (4,)),
    (1, 3, 6): ((4, 5), (4, 5)),
    (2, 3, 4): ((1,), (1,)),
    (2, 3, 5): ((1, 4), (1, 4)),
    (2, 3, 6): ((1, 4, 5), (1, 4, 5)),
}


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.number:2d} {self.name} ({self.seconds:.2f}s): {self.detail}"

    def to_dict(self) -> dict:
        return {
            "criterion": self.number,
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
        }


def _timed(number: int, name: str, fn: Callable[[], tuple[bool, str]]) -> CheckResult:
    start = time.perf_counter()
    passed, detail = fn()
    return CheckResult(number, name, passed, detail, time.perf_counter() - start)


def check_basis_counts(max_n: int = 6) -> CheckResult:
    def run():
        bad = []
        for n in range(1, max_n + 1):
            direct, by_matrix = trivial_uip(n), trivial_uip_by_matrix(n)
            want = n * n + 1
            if not (len(direct.bases) == len(by_matrix.bases) == want
                    and direct.to_json() == by_matrix.to_json()):
                bad.append(n)
        return not bad, f"n=1..{max_n}" + (f", failed at {bad}" if bad else ", |B| = n^2+1 both routes")
    return _timed(1, "basis counts", run)


def check_worked_example() -> CheckResult:
    def run():
        m = trivial_uip(3)
        got = {}
        for b in m.bases:
            got[b] = (tuple(sorted(active_set(m, b))), tuple(sorted(external_set(m, b))))
        diff = [b for b in P3_TABLE if got.get(b) != P3_TABLE[b]]
        ok = not diff and set(got) == set(P3_TABLE)
        return ok, "P3 Act/Ext table reproduced" if ok else f"rows differ: {diff}"
    return _timed(2, "P3 activity table", run)


def check_psi_identity(sizes=(2, 3, 4), samples: int = 50, seed: int = 20240101) -> CheckResult:
    def run():
        rng = random.Random(seed)
        compared = 0
        for n in sizes:
            for _ in range(samples):
                a = RationalMatrix.from_rows(
                    [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
                )
                b = psi(a)
                full = range(1, n + 1)
                for k in range(n + 1):
                    for rows in combinations(full, k):
                        for cols in combinations(full, k):
                            if minor(a, rows, cols) != minor(b, full, k_set(rows, cols, n)):
                                return False, f"mismatch n={n} I={rows} J={cols} A={a.to_json()}"
                            compared += 1
        return True, f"{compared} (I,J) pairs over {samples} matrices per n in {tuple(sizes)}"
    return _timed(3, "psi identity", run)


def check_catalan_counts(max_n: int = 7, max_recursion: int = 20) -> CheckResult:
    def run():
        counts = [len(enumerate_uios(n)) for n in range(1, max_n + 1)]
        want = [catalan(n) for n in range(1, max_n + 1)]
        conv = catalan_by_convolution(max_recursion)
        closed = [catalan(n) for n in range(max_recursion + 1)]
        ok = counts == want and conv == closed and (max_n < 4 or counts[3] == 14)
        return ok, f"UIO counts {counts}; closed form = convolution for n<={max_recursion}: {conv == closed}"
    return _timed(4, "catalan counts", run)


def check_circuit_descriptions(max_n: int = 5) -> CheckResult:
    def run():
        bad = [n for n in range(1, max_n + 1)
               if circuits(trivial_uip(n)) != trivial_circuits(n)]
        return not bad, f"n=1..{max_n}" + (f", failed at {bad}" if bad else "")
    return _timed(5, "circuit descriptions", run)


def check_prop210(max_rank: int = 4) -> CheckResult:
    def run():
        pairs = 0
        for n in range(1, max_rank + 1):
            for p in uip_catalog(n):
                m = p.matroid
                closed = {b: set(b) | external_set(m, b) for b in m.bases}
                for a in m.bases:
                    for b in m.bases:
                        two = leq_ext(m, a, b)
                        if two != leq_ext_lex(m, a, b):
                            return False, f"(2) vs (4) differ on {a}, {b} in UIP {p.source.profile}"
                        if two and not closed[a] <= closed[b]:
                            return False, f"(3) fails on {a}, {b} in UIP {p.source.profile}"
                        pairs += 1
        return True, f"{pairs} ordered basis pairs over all UIPs of rank <= {max_rank}"
    return _timed(6, "order characterizations agree", run)


def check_minimality(max_n: int = 5) -> CheckResult:
    def run():
        for n in range(1, max_n + 1):
            m = trivial_uip(n)
            minimal = set(external_poset(m).minimal())
            for b in m.bases:
                if (epsilon(m, b) == 0) != (b in minimal):
                    return False, f"n={n}: basis {b} breaks eps(B)=0 <=> minimal"
        return True, f"n=1..{max_n}, every basis"
    return _timed(7, "zero epsilon iff minimal", run)


def check_main_theorem(max_n: int = 5) -> CheckResult:
    def run():
        reports = [verify_recursion(n) for n in range(1, max_n + 1)]
        bad = [r.n for r in reports if not (r.equal and r.elements == (r.n + 1) ** 2 + 1)]
        sizes = [r.elements for r in reports]
        return not bad, f"n=1..{max_n}, element counts {sizes}" + (f", failed at {bad}" if bad else "")
    return _timed(8, "gamma recursion", run)


def check_order_preservation(max_n: int = 4) -> CheckResult:
    def run():
        checked = 0
        for n in range(1, max_n + 1):
            ex = external_poset(trivial_uip(n))
            big = trivial_uip(n + 1)
            for a, b in ex.pairs():
                if not leq_ext(big, reinforce(a, n), reinforce(b, n)):
                    return False, f"n={n}: {a} <= {b} not preserved"
                checked += 1
        return True, f"{checked} related pairs, n=1..{max_n}"
    return _timed(9, "order preservation", run)


def minor_scan_document(rank: int = 4, profile=None) -> dict:
    u = trivial_order(rank) if profile is None else UnitIntervalOrder(tuple(profile))
    return {
        "profile": list(u.profile),
        "minors": [entry.to_dict() for entry in minor_scan(u)],
    }


def golden_text(name: str) -> str:
    return (resources.files("positroid_lab") / "golden" / name).read_text()


def check_minor_scan(rank: int = 4) -> CheckResult:
    def run():
        doc = minor_scan_document(rank)
        ground = 2 * rank
        tested = len(doc["minors"])
        hits = sum(1 for e in doc["minors"] if e["isomorphic_to"])
        ok = tested == ground * (ground - 1) and hits > 0
        if rank == 4:
            golden = json.loads(golden_text("minor_scan_p4.json"))
            ok = ok and golden == doc
        return ok, f"{tested} minors tested, {hits} isomorphic to a rank-{rank - 1} UIP"
    return _timed(10, "minor scan", run)


def check_golden_dot() -> CheckResult:
    def run():
        bad = []
        for n in (2, 3):
            first = to_dot(external_poset(trivial_uip(n)))
            second = to_dot(external_poset(trivial_uip_by_matrix(n)))
            if first != second or first != golden_text(f"ex_p{n}.dot"):
                bad.append(n)
        return not bad, "Ex(P2), Ex(P3) DOT match golden files" if not bad else f"differs for n={bad}"
    return _timed(11, "golden DOT", run)


def run_all(max_n: int | None = None) -> list[CheckResult]:
    """Every acceptance check, with upper ranges optionally capped at ``max_n``."""
    def cap(n):
        return n if max_n is None else min(n, max_n)
    return [
        check_basis_counts(cap(6)),
        check_worked_example(),
        check_psi_identity(tuple(n for n in (2, 3, 4) if n <= cap(4))),
        check_catalan_counts(cap(7)),
        check_circuit_descriptions(cap(5)),
        check_prop210(cap(4)),
        check_minimality(cap(5)),
        check_main_theorem(cap(5)),
        check_order_preservation(cap(4)),
        check_minor_scan(max(2, cap(4))),
        check_golden_dot(),
    ]
