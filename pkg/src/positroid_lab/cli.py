"""``positroid-lab`` command line.

Machine-readable output (JSON or DOT) goes to stdout; diagnostics go to
stderr.  Exit status is 0 on success, 1 when a verification fails and 2 for
usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from fractions import Fraction

from . import checks
from .errors import PositroidLabError
from .external import external_poset, to_dot
from .gamma import gamma, verify_recursion
from .linalg import RationalMatrix, psi
from .matroid import Matroid
from .positroid import trivial_uip, uip
from .uio import (
    UnitIntervalOrder,
    antiadjacency,
    catalan,
    enumerate_uios,
    uio_from_intervals,
)

log = logging.getLogger("positroid_lab")

# desk-scale defaults; POSITROID_LAB_MAX_N may raise them
BOUNDS = {"uio": 7, "poset": 6, "uip": 7, "minor-scan": 5}
ENV_MAX_N = "POSITROID_LAB_MAX_N"


class UsageError(Exception):
    pass


def _bound(kind: str) -> int:
    limit = BOUNDS[kind]
    raw = os.environ.get(ENV_MAX_N)
    if raw:
        try:
            limit = max(limit, int(raw))
        except ValueError:
            raise UsageError(f"{ENV_MAX_N} must be an integer, got {raw!r}") from None
    return limit


def _check_n(n: int, kind: str, what: str, low: int = 1) -> int:
    limit = _bound(kind)
    if not low <= n <= limit:
        raise UsageError(f"{what} must lie in [{low}, {limit}], got {n} (raise with {ENV_MAX_N})")
    return n


def _load_json(path: str):
    if path == "-":
        text, name = sys.stdin.read(), "<stdin>"
    else:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
        name = path
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{name}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def _emit(obj) -> None:
    sys.stdout.write(obj if isinstance(obj, str) else json.dumps(obj) + "\n")


def _profile(tokens) -> UnitIntervalOrder:
    try:
        return UnitIntervalOrder(tuple(int(t) for t in tokens))
    except ValueError as exc:
        raise UsageError(f"bad zero profile {' '.join(map(str, tokens))}: {exc}") from None


def _matroid_from_args(args) -> Matroid:
    if args.trivial is not None:
        return trivial_uip(_check_n(args.trivial, "poset", "--trivial n"))
    if args.profile:
        u = _profile(args.profile)
        _check_n(u.n, "uip", "profile length")
        return uip(u).matroid
    if args.file:
        return Matroid.from_dict(_load_json(args.file))
    raise UsageError("give a matroid file, --trivial n, or --profile z1 ... zn")


# -- commands ------------------------------------------------------------


def cmd_catalan(args) -> int:
    if args.n < 0:
        raise UsageError("n must be >= 0")
    _emit({"n": args.n, "catalan": catalan(args.n)})
    return 0


def cmd_uios(args) -> int:
    n = _check_n(args.n, "uio", "n")
    _emit([u.to_dict() for u in enumerate_uios(n)])
    return 0


def cmd_antiadjacency(args) -> int:
    _emit(antiadjacency(_profile(args.profile)).to_dict())
    return 0


def cmd_psi(args) -> int:
    _emit(psi(RationalMatrix.from_dict(_load_json(args.file))).to_dict())
    return 0


def cmd_uip(args) -> int:
    if args.intervals:
        u = uio_from_intervals([_parse_number(x) for x in args.intervals])
    elif args.profile:
        u = _profile(args.profile)
    else:
        raise UsageError("give a profile or --intervals q1 ... qn")
    _check_n(u.n, "uip", "order size")
    _emit(uip(u).to_dict())
    return 0


def _parse_number(text: str) -> Fraction:
    try:
        return Fraction(text)
    except ValueError:
        raise UsageError(f"not a rational number: {text!r}") from None


def cmd_bases(args) -> int:
    _emit(_matroid_from_args(args).to_dict())
    return 0


def cmd_circuits(args) -> int:
    m = _matroid_from_args(args)
    _emit({"ground": m.ground, "rank": m.rank, "circuits": [list(c) for c in m.circuits]})
    return 0


def cmd_ext_poset(args) -> int:
    m = _matroid_from_args(args)
    if m.ground > 2 * _bound("poset"):
        raise UsageError(f"ground set of size {m.ground} is too large for a poset")
    p = external_poset(m)
    _emit(to_dot(p) if args.dot else p.to_dict())
    return 0


def cmd_gamma(args) -> int:
    n = _check_n(args.n, "poset", "n", low=1)
    if n + 1 > _bound("poset"):
        raise UsageError(f"gamma({n}) builds rank {n + 1}, above the bound {_bound('poset')}")
    start = time.perf_counter()
    source = external_poset(trivial_uip(n))
    t_source = time.perf_counter() - start
    start = time.perf_counter()
    trace = gamma(source, n)
    t_gamma = time.perf_counter() - start
    if args.timing:
        start = time.perf_counter()
        external_poset(trivial_uip(n + 1))
        t_oracle = time.perf_counter() - start
        log.info("Ex(P_%d) by brute force: %.4fs; gamma step: %.4fs; Ex(P_%d) by brute force: %.4fs",
                 n, t_source, t_gamma, n + 1, t_oracle)
    _emit(trace.to_dot() if args.dot else trace.to_dict())
    return 0


def cmd_verify(args) -> int:
    if args.recursion is not None:
        n = _check_n(args.recursion, "poset", "--recursion n")
        if n + 1 > _bound("poset"):
            raise UsageError(f"--recursion {n} needs rank {n + 1}, above the bound {_bound('poset')}")
        report = verify_recursion(n)
        _emit(report.to_dict())
        return 0 if report.ok else 1
    if args.all is not None:
        results = checks.run_all(_check_n(args.all, "poset", "--all maxN"))
    elif args.counts is not None:
        results = [checks.check_basis_counts(_check_n(args.counts, "poset", "--counts n"))]
    elif args.prop210 is not None:
        results = [checks.check_prop210(_check_n(args.prop210, "poset", "--prop210 rank"))]
    elif args.psi_identity is not None:
        n = _check_n(args.psi_identity, "uip", "--psi-identity n")
        results = [checks.check_psi_identity((n,))]
    else:
        raise UsageError("choose one of --recursion, --counts, --prop210, --psi-identity, --all")
    for r in results:
        log.info(r.line())
    _emit([r.to_dict() for r in results])
    return 0 if all(r.passed for r in results) else 1


def cmd_minor_scan(args) -> int:
    if args.profile:
        u = _profile(args.profile)
        _check_n(u.n, "minor-scan", "profile length", low=2)
        doc = checks.minor_scan_document(u.n, u.profile)
    else:
        doc = checks.minor_scan_document(_check_n(args.rank, "minor-scan", "rank", low=2))
    hits = sum(1 for e in doc["minors"] if e["isomorphic_to"])
    log.info("%d of %d minors are isomorphic to a smaller UIP", hits, len(doc["minors"]))
    _emit(doc)
    return 0


# -- parser --------------------------------------------------------------


def _add_matroid_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("file", nargs="?", help="matroid JSON file ('-' for stdin)")
    p.add_argument("--trivial", type=int, metavar="N", help="rank-N trivial UIP")
    p.add_argument("--profile", nargs="+", metavar="Z", help="UIP of the order with this zero profile")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="positroid-lab",
        description="Unit interval positroids and externally ordered bases.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="more diagnostics on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalan", help="n-th Catalan number")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_catalan)

    p = sub.add_parser("uios", help="enumerate unit interval orders on [n]")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_uios)

    p = sub.add_parser("antiadjacency", help="antiadjacency matrix of a zero profile")
    p.add_argument("profile", nargs="+")
    p.set_defaults(func=cmd_antiadjacency)

    p = sub.add_parser("psi", help="apply psi to a square matrix given as JSON")
    p.add_argument("file")
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("uip", help="unit interval positroid of an order")
    p.add_argument("profile", nargs="*")
    p.add_argument("--intervals", nargs="+", metavar="Q", help="left endpoints, sorted")
    p.set_defaults(func=cmd_uip)

    p = sub.add_parser("bases", help="bases of a matroid")
    _add_matroid_source(p)
    p.set_defaults(func=cmd_bases)

    p = sub.add_parser("circuits", help="circuits of a matroid")
    _add_matroid_source(p)
    p.set_defaults(func=cmd_circuits)

    for name, func, helptext in (
        ("ext-poset", cmd_ext_poset, "externally ordered poset of bases"),
        ("gamma", cmd_gamma, "apply the recursion to Ex(P_n)"),
    ):
        p = sub.add_parser(name, help=helptext)
        if name == "gamma":
            p.add_argument("n", type=int)
            p.add_argument("--timing", action="store_true", help="log timings against brute force")
        else:
            _add_matroid_source(p)
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--dot", action="store_true", help="Graphviz DOT output")
        fmt.add_argument("--json", action="store_true", help="JSON output (default)")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="run acceptance checks")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--recursion", type=int, metavar="N")
    g.add_argument("--counts", type=int, metavar="N")
    g.add_argument("--prop210", type=int, metavar="RANK")
    g.add_argument("--psi-identity", type=int, metavar="N")
    g.add_argument("--all", type=int, metavar="MAXN")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(
        "minor-scan",
        help="match every delete-t/contract-s minor against UIPs one rank down",
        description="Iterates over every ordered pair (t, s) of distinct ground elements.",
    )
    p.add_argument("rank", type=int, nargs="?", default=4)
    p.add_argument("--profile", nargs="+", metavar="Z", help="scan this UIP instead of the trivial one")
    p.set_defaults(func=cmd_minor_scan)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
    log.handlers[:] = [handler]
    log.setLevel(logging.DEBUG if args.verbose else logging.INFO)
    log.propagate = False
    try:
        return args.func(args)
    except (UsageError, PositroidLabError) as exc:
        print(f"positroid-lab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
