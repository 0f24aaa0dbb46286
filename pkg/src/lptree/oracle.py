"""Naive reference enumerations, independent of the generating tree.

None of these touch the succession machinery: link patterns come from the
interval recursion on point 0, preimages from a full scan of the basis, and
avoiders from filtering all n! permutations by brute-force triple search.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

from .dyck import DyckPath
from .errors import MissingLink, SizeLimit
from .patterns import LinkPattern
from .perms import Perm123
from .temperley_lieb import apply_generator

__all__ = [
    "brute_patterns",
    "brute_preimages",
    "brute_avoiders",
    "all_pairings",
    "parenthesis_dyck",
]


@lru_cache(maxsize=None)
def _interval_matchings(lo: int, hi: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    # noncrossing matchings of the points lo..hi-1
    if lo >= hi:
        return ((),)
    out = []
    for j in range(lo + 1, hi, 2):
        for inner in _interval_matchings(lo + 1, j):
            for outer in _interval_matchings(j + 1, hi):
                out.append(((lo, j),) + inner + outer)
    return tuple(out)


def brute_patterns(n: int) -> set[LinkPattern]:
    if n > 10:
        raise SizeLimit("brute_patterns is limited to n <= 10")
    result = set()
    for pairs in _interval_matchings(0, 2 * n):
        partner = [0] * (2 * n)
        for a, b in pairs:
            partner[a], partner[b] = b, a
        result.add(LinkPattern(partner))
    return result


def all_pairings(points):
    """Every perfect matching of ``points``, crossing or not."""
    points = list(points)
    if not points:
        yield []
        return
    first = points[0]
    for k in range(1, len(points)):
        rest = points[1:k] + points[k + 1:]
        for tail in all_pairings(rest):
            yield [(first, points[k])] + tail


def brute_preimages(target: LinkPattern, i: int) -> set[LinkPattern]:
    n = len(target) // 2
    if n > 8:
        raise SizeLimit("brute_preimages is limited to n <= 8")
    if target[i] != (i + 1) % len(target):
        raise MissingLink(f"pattern has no link ({i},{(i + 1) % len(target)})")
    return {tau for tau in brute_patterns(n) if apply_generator(tau, i).pattern == target}


def brute_avoiders(n: int) -> set[Perm123]:
    if n > 8:
        raise SizeLimit("brute_avoiders is limited to n <= 8")
    found = set()
    for sigma in permutations(range(1, n + 1)):
        if not any(a < b < c for a, b, c in combinations(sigma, 3)):
            found.add(Perm123._trusted(sigma))
    return found


def parenthesis_dyck(pi: LinkPattern) -> DyckPath:
    """Classical comparator: read points 0..2n-1, opener -> U, closer -> D."""
    return DyckPath("".join("U" if j > i else "D" for i, j in enumerate(pi)))
