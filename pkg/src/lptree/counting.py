"""Exact refined Catalan counts and tree histograms."""

from __future__ import annotations

from collections import Counter
from math import comb

from .errors import DomainError
from .family import Family
from .stats import statistic
from .tree import Node, iterate_subtree, tree_root

__all__ = [
    "catalan",
    "count_by_exposure",
    "count_by_interaction",
    "formula",
    "histogram",
    "subtree_histogram",
]


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def catalan(n: int) -> int:
    if n < 0:
        raise DomainError("catalan(n) needs n >= 0")
    return _exact_div(comb(2 * n, n), n + 1)


def count_by_exposure(n: int, k: int) -> int:
    """Patterns of n strands with k outermost links: k/(2n-k) * C(2n-k, n).

    The same ballot number counts Dyck paths with last descent length k.
    """
    if not 1 <= k <= n:
        raise DomainError(f"exposure {k} outside 1..{n}")
    return _exact_div(k * comb(2 * n - k, n), 2 * n - k)


def count_by_interaction(n: int, ell: int) -> int:
    """Narayana number (1/n) C(n, ell+1) C(n, ell)."""
    if not 0 <= ell <= n - 1:
        raise DomainError(f"interaction {ell} outside 0..{n - 1}")
    return _exact_div(comb(n, ell + 1) * comb(n, ell), n)


def formula(stat: str, n: int) -> dict[int, int]:
    """Closed-form distribution of a statistic over level n."""
    if stat in ("exposure", "ldl"):
        return {k: count_by_exposure(n, k) for k in range(1, n + 1)}
    if stat == "interaction":
        return {ell: count_by_interaction(n, ell) for ell in range(n)}
    if stat == "peaks":
        return {j: count_by_interaction(n, j - 1) for j in range(1, n + 1)}
    raise DomainError(f"no closed form for statistic {stat!r}")


def subtree_histogram(node: Node, n: int, stat: str) -> Counter:
    fn = statistic(stat, node.family)
    return Counter(fn(x) for x in iterate_subtree(node, n))


def histogram(family, n: int, stat: str) -> dict[int, int]:
    """Observed distribution of ``stat`` over the level-n stream, sorted by value."""
    family = Family(family)
    counts = subtree_histogram(tree_root(family), n, stat)
    return dict(sorted(counts.items()))
