"""Slow, obviously-correct reference implementations used only by tests."""

from fractions import Fraction
from itertools import combinations


def cofactor_det(rows):
    """Laplace expansion along the first row."""
    if not rows:
        return Fraction(1)
    if len(rows) == 1:
        return Fraction(rows[0][0])
    return sum(
        (-1) ** j * Fraction(rows[0][j]) * cofactor_det([r[:j] + r[j + 1:] for r in rows[1:]])
        for j in range(len(rows))
    )


def brute_circuits(ground, bases):
    """Minimal subsets of the ground set not contained in any basis."""
    bases = [set(b) for b in bases]

    def indep(s):
        return any(set(s) <= b for b in bases)

    dependent = [
        set(s)
        for k in range(1, ground + 1)
        for s in combinations(range(1, ground + 1), k)
        if not indep(s)
    ]
    return sorted(
        tuple(sorted(d)) for d in dependent if not any(o < d for o in dependent)
    )


def brute_ext_relation(bases, circuits):
    """Pairs (a, b) with a inside b plus b's externally active elements."""
    def ext(b):
        return {min(c) for c in circuits if set(c) - {min(c)} <= set(b)} - set(b)

    return {(a, b) for a in bases for b in bases if set(a) <= set(b) | ext(b)}


def brute_covers(pairs, elements):
    strict = {(a, b) for a, b in pairs if a != b}
    return {
        (a, b) for a, b in strict
        if not any((a, c) in strict and (c, b) in strict for c in elements)
    }
