"""Link patterns: noncrossing perfect matchings of 2n points on a circle.

Points are labelled 0..2n-1 counter-clockwise, point k sitting at the
2n-th root of unity exp(2*pi*i*k/2n).  A pattern is stored as its partner
sequence, ``pi[k]`` being the point matched with ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import Crossing, IndexOutOfRange, NoSuchStrand, NotAMatching
from .family import Family

__all__ = [
    "LinkPattern",
    "ArcDiagram",
    "make_link_pattern",
    "linearize",
    "exposure",
    "insert_strand",
    "delete_strand",
    "rotate",
]


def _check_noncrossing(partner) -> None:
    stack = []
    for i, j in enumerate(partner):
        if j > i:
            stack.append(i)
        elif not stack or stack.pop() != j:
            raise Crossing(f"chord ({j},{i}) crosses another chord")


class LinkPattern(tuple):
    """Immutable partner sequence of a link pattern of ``n`` strands.

    ``LinkPattern([3, 2, 1, 0])`` is the nested pattern {(0,3),(1,2)}.
    Construction validates; use :func:`make_link_pattern` to build from pairs.
    """

    __slots__ = ()
    family = Family.LP

    def __new__(cls, partner: Iterable[int]) -> LinkPattern:
        partner = tuple(partner)
        size = len(partner)
        if size == 0 or size % 2:
            raise NotAMatching(f"need an even, positive number of points, got {size}")
        for i, j in enumerate(partner):
            if not 0 <= j < size or j == i or partner[j] != i:
                raise NotAMatching(f"point {i} is not properly matched")
        _check_noncrossing(partner)
        return tuple.__new__(cls, partner)

    @classmethod
    def _trusted(cls, partner) -> LinkPattern:
        # Caller guarantees a valid noncrossing involution.
        return tuple.__new__(cls, partner)

    @property
    def n(self) -> int:
        return len(self) // 2

    @property
    def level(self) -> int:
        return len(self) // 2

    def pairs(self) -> list[tuple[int, int]]:
        """Canonical pair list: (min, max) pairs sorted by first point."""
        return [(i, j) for i, j in enumerate(self) if i < j]

    def has_link(self, a: int, b: int) -> bool:
        return self[a % len(self)] == b % len(self)

    def __repr__(self) -> str:
        body = ",".join(f"({a},{b})" for a, b in self.pairs())
        return f"LinkPattern({{{body}}})"


def make_link_pattern(pairs: Iterable[tuple[int, int]], n: int) -> LinkPattern:
    """Validate a set of point pairs as a link pattern of ``n`` strands."""
    if n < 1:
        raise NotAMatching("a link pattern needs at least one strand")
    size = 2 * n
    partner = [-1] * size
    for a, b in pairs:
        for p in (a, b):
            if not 0 <= p < size:
                raise NotAMatching(f"point {p} outside 0..{size - 1}")
            if partner[p] != -1:
                raise NotAMatching(f"point {p} used twice")
        if a == b:
            raise NotAMatching(f"point {a} paired with itself")
        partner[a] = b
        partner[b] = a
    missing = [p for p, q in enumerate(partner) if q == -1]
    if missing:
        raise NotAMatching(f"points {missing} are unmatched")
    _check_noncrossing(partner)
    return LinkPattern._trusted(partner)


@dataclass(frozen=True)
class ArcDiagram:
    """A link pattern cut open in the gap after ``cut_gap`` and laid on a line.

    ``order[p]`` is the point label at position p.  ``arcs`` are position
    pairs (p, q), p < q, sorted by p; ``depth[a]`` counts the arcs strictly
    enclosing arc ``a``.
    """

    order: tuple[int, ...]
    arcs: tuple[tuple[int, int], ...]
    depth: tuple[int, ...]
    cut_gap: int

    @property
    def outermost(self) -> list[tuple[int, int]]:
        """Arcs touching the unbounded face, as point-label pairs left to right."""
        return [
            (self.order[p], self.order[q])
            for (p, q), d in zip(self.arcs, self.depth)
            if d == 0
        ]

    @property
    def exposure(self) -> int:
        return sum(1 for d in self.depth if d == 0)


def linearize(pi: LinkPattern, gap: int) -> ArcDiagram:
    """Cut the circle between ``gap`` and ``gap + 1`` and unfold it onto a line."""
    size = len(pi)
    if not 0 <= gap < size:
        raise IndexOutOfRange(f"gap {gap} outside 0..{size - 1}")
    order = tuple((gap + 1 + p) % size for p in range(size))
    arcs = []
    depth = []
    open_arcs = 0
    for p, label in enumerate(order):
        q = (pi[label] - gap - 1) % size
        if q > p:
            arcs.append((p, q))
            depth.append(open_arcs)
            open_arcs += 1
        else:
            open_arcs -= 1
    return ArcDiagram(order, tuple(arcs), tuple(depth), gap)


def exposure(pi: LinkPattern, gap: int = 0) -> int:
    """Number of outermost links when ``pi`` is cut between ``gap`` and ``gap + 1``."""
    size = len(pi)
    if not 0 <= gap < size:
        raise IndexOutOfRange(f"gap {gap} outside 0..{size - 1}")
    start = gap + 1
    count = 0
    p = 0
    while p < size:
        # Jump over the whole depth-0 arc starting at position p.
        p = (pi[(start + p) % size] - start) % size + 1
        count += 1
    return count


def insert_strand(pi: LinkPattern, i: int) -> LinkPattern:
    """Insert a new link in the gap before old point ``i``, labelled (i, i+1).

    ``i`` ranges over 0..2n+1 (labels of the enlarged pattern).  The wrap
    case ``i == 2n+1`` puts the new points between old 0 and old 1, so old 0
    becomes 2n and the new link is (2n+1, 0).
    """
    size = len(pi)
    if not 0 <= i <= size + 1:
        raise IndexOutOfRange(f"insertion index {i} outside 0..{size + 1}")
    if i == size + 1:
        # old 0 -> size, old j -> j otherwise
        body = [v or size for v in pi[1:]]
        return LinkPattern._trusted([size + 1, *body, pi[0], 0])
    shifted = [v if v < i else v + 2 for v in pi]
    return LinkPattern._trusted(shifted[:i] + [i + 1, i] + shifted[i:])


def delete_strand(pi: LinkPattern, i: int) -> LinkPattern:
    """Remove the link (i, i+1 mod 2n); the exact inverse of :func:`insert_strand`."""
    size = len(pi)
    if not 0 <= i < size:
        raise IndexOutOfRange(f"deletion index {i} outside 0..{size - 1}")
    if size == 2:
        raise NoSuchStrand("cannot delete the only strand")
    j = (i + 1) % size
    if pi[i] != j:
        raise NoSuchStrand(f"pattern has no link ({i},{j})")
    if i == size - 1:
        # inverse wrap: drop points size-1 and 0, old size-2 -> 0
        last = size - 2
        body = [0 if v == last else v for v in pi[1:last]]
        return LinkPattern._trusted([pi[last], *body])
    rest = pi[:i] + pi[i + 2:]
    return LinkPattern._trusted([v if v < i else v - 2 for v in rest])


def rotate(pi: LinkPattern, r: int) -> LinkPattern:
    """Relabel every point k as (k + r) mod 2n."""
    size = len(pi)
    r %= size
    partner = [0] * size
    for k, v in enumerate(pi):
        partner[(k + r) % size] = (v + r) % size
    return LinkPattern._trusted(partner)
