"""123-avoiding permutations in one-line notation."""

from __future__ import annotations

from .errors import InvalidPermutation
from .family import Family

__all__ = ["Perm123", "first_ascent"]


def _contains_123(values) -> bool:
    # v[j] is the middle of a 123 iff something smaller precedes it and
    # something larger follows it.
    n = len(values)
    suffix_max = [0] * (n + 1)
    for j in range(n - 1, -1, -1):
        suffix_max[j] = max(suffix_max[j + 1], values[j])
    low = values[0] if values else 0
    for j in range(1, n - 1):
        v = values[j]
        if low < v < suffix_max[j + 1]:
            return True
        low = min(low, v)
    return False


class Perm123(tuple):
    __slots__ = ()
    family = Family.PERM

    def __new__(cls, values) -> Perm123:
        values = tuple(int(v) for v in values)
        if sorted(values) != list(range(1, len(values) + 1)) or not values:
            raise InvalidPermutation(f"{values} is not a permutation of 1..n")
        if _contains_123(values):
            raise InvalidPermutation(f"{values} contains the pattern 123")
        return tuple.__new__(cls, values)

    @classmethod
    def _trusted(cls, values) -> Perm123:
        return tuple.__new__(cls, values)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def level(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"Perm123({''.join(map(str, self)) if len(self) < 10 else list(self)})"


def first_ascent(sigma) -> int:
    """1-based index of the first ascent, or n when sigma is decreasing."""
    for i in range(len(sigma) - 1):
        if sigma[i] < sigma[i + 1]:
            return i + 1
    return len(sigma)
