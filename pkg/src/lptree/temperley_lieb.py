"""Temperley-Lieb generators acting on the link-pattern basis.

``e_i`` caps points i and i+1 (mod 2n) together.  Applied to a pattern it
joins the former partners of i and i+1; if (i, i+1) is already a link a
closed loop is produced and removed.  Loops carry weight 1, but are counted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .errors import IndexOutOfRange, MissingLink
from .patterns import LinkPattern, exposure

__all__ = [
    "ActionResult",
    "RelationRecord",
    "RelationReport",
    "apply_generator",
    "apply_word",
    "preimages",
    "check_relations",
    "circular_distance",
]


class ActionResult(NamedTuple):
    pattern: LinkPattern
    loops: int


def _index(pi: LinkPattern, i: int) -> int:
    if not 0 <= i < len(pi):
        raise IndexOutOfRange(f"generator index {i} outside 0..{len(pi) - 1}")
    return i


def apply_generator(pi: LinkPattern, i: int) -> ActionResult:
    size = len(pi)
    j = (_index(pi, i) + 1) % size
    if pi[i] == j:
        return ActionResult(pi, 1)
    x, y = pi[i], pi[j]
    partner = list(pi)
    partner[i], partner[j] = j, i
    partner[x], partner[y] = y, x
    return ActionResult(LinkPattern._trusted(partner), 0)


def apply_word(pi: LinkPattern, word: Iterable[int]) -> ActionResult:
    """Apply generators in the order listed, summing removed loops."""
    loops = 0
    for i in word:
        pi, extra = apply_generator(pi, i)
        loops += extra
    return ActionResult(pi, loops)


def preimages(target: LinkPattern, i: int) -> list[LinkPattern]:
    """Every pattern sent to ``target`` by ``e_i``, by increasing exposure.

    Exposure is measured in the cut just after point i+1, where the link
    (i, i+1) sits at the right end of the line.  Besides ``target`` itself,
    each outermost arc (a, b) can be reconnected to the cap as (a, i+1),
    (b, i).
    """
    size = len(target)
    j = (_index(target, i) + 1) % size
    if target[i] != j:
        raise MissingLink(f"pattern has no link ({i},{j})")
    start = (j + 1) % size
    found = []
    p = 0
    while p < size - 2:
        a = (start + p) % size
        b = target[a]
        partner = list(target)
        partner[a], partner[j] = j, a
        partner[b], partner[i] = i, b
        found.append(LinkPattern._trusted(partner))
        p = (b - start) % size + 1
    found.append(target)
    gap = j
    return sorted(found, key=lambda pi: exposure(pi, gap))


def circular_distance(i: int, j: int, size: int) -> int:
    d = abs(i - j) % size
    return min(d, size - d)


@dataclass(frozen=True)
class RelationRecord:
    relation: str
    indices: tuple[int, ...]
    passed: bool
    witness: LinkPattern | None = None


@dataclass
class RelationReport:
    """Outcome of checking the defining relations on the whole basis.

    Relation ids: ``1`` idempotence, ``2`` e_i e_{i+-1} e_i = e_i, ``3``
    commutation at circular distance > 1, and ``3-literal`` for the pair
    (0, 2n-1), which the literal |i-j| > 1 reading would also require to
    commute.  That last record is expected to fail for n >= 2.
    """

    n: int
    records: list[RelationRecord] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.records if r.relation != "3-literal")

    @property
    def literal_witness(self) -> LinkPattern | None:
        for r in self.records:
            if r.relation == "3-literal" and not r.passed:
                return r.witness
        return None

    def to_table(self) -> str:
        lines = [f"relations n={self.n}", f"{'relation':<10} {'indices':<10} status  witness"]
        for r in self.records:
            idx = ",".join(map(str, r.indices))
            status = "pass" if r.passed else "FAIL"
            wit = "" if r.witness is None else repr(r.witness)
            lines.append(f"{r.relation:<10} {idx:<10} {status:<7} {wit}".rstrip())
        return "\n".join(lines)

    def to_records(self) -> list[str]:
        from .codec import encode

        out = []
        for r in self.records:
            line = (
                f"relation={r.relation}\tindices={','.join(map(str, r.indices))}"
                f"\tstatus={'pass' if r.passed else 'fail'}"
            )
            if r.witness is not None:
                line += f"\twitness={encode(r.witness)}"
            out.append(line)
        return out


def _first_disagreement(basis: Sequence[LinkPattern], left, right) -> LinkPattern | None:
    for pi in basis:
        if apply_word(pi, left).pattern != apply_word(pi, right).pattern:
            return pi
    return None


def check_relations(n: int, basis: Sequence[LinkPattern] | None = None) -> RelationReport:
    """Extensionally verify relations (1)-(3) on every basis pattern of size n.

    Words are written as operator products, so ``e_a e_b`` applies b first.
    """
    if basis is None:
        from .oracle import brute_patterns

        basis = sorted(brute_patterns(n))
    size = 2 * n
    report = RelationReport(n)

    def record(rel, idx, left, right):
        # operator product e_a e_b ... acts right-to-left
        wit = _first_disagreement(basis, list(reversed(left)), list(reversed(right)))
        report.records.append(RelationRecord(rel, idx, wit is None, wit))

    for i in range(size):
        record("1", (i,), [i, i], [i])
    for i in range(size):
        for j in sorted({(i + 1) % size, (i - 1) % size}):
            record("2", (i, j), [i, j, i], [i])
    for i in range(size):
        for j in range(i + 1, size):
            if circular_distance(i, j, size) > 1:
                record("3", (i, j), [i, j], [j, i])
    if size - 1 > 1:
        record("3-literal", (0, size - 1), [0, size - 1], [size - 1, 0])
    return report
