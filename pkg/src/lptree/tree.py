"""Generating trees for the Catalan families.

Every family follows West's rule (k) -> (2)(3)...(k+1): a node with label k
has k children whose labels are 2..k+1, listed in that order.  A node is
addressed by its path code, the 1-based sibling ranks read from the root.

Link patterns grow by inserting a strand at the wrap position and taking
the preimages of the last generator (the M_i surgeries); Dyck paths by
adding a peak on the last descent; 123-avoiding permutations by inserting
the new maximum before the first ascent.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Iterator, Sequence, Union

from .dyck import DyckPath, last_descent_length
from .errors import AtRoot, InvalidCode, MissingLink, RankOutOfRange
from .family import Family
from .patterns import LinkPattern, delete_strand, exposure, insert_strand
from .perms import Perm123, first_ascent
from .temperley_lieb import apply_generator

__all__ = [
    "Node",
    "SuccessionRule",
    "FrameProbe",
    "rule_for",
    "tree_root",
    "label",
    "children",
    "parent",
    "child_rank",
    "m_op",
    "check_code",
    "path_code",
    "node_at",
    "iterate_level",
    "iterate_subtree",
]

Node = Union[LinkPattern, DyckPath, Perm123]


class SuccessionRule:
    """Interface shared by the three trees.

    Subclasses provide ``root``, ``label``, ``successors``, ``parent`` and
    ``child_rank``; ``child`` may be overridden when a single child is cheaper
    to build than the whole sibling list.
    """

    family: Family

    def root(self) -> Node:
        raise NotImplementedError

    def label(self, node) -> int:
        raise NotImplementedError

    def successors(self, node) -> Iterator[Node]:
        raise NotImplementedError

    def parent(self, node) -> Node:
        raise NotImplementedError

    def child_rank(self, node) -> int:
        raise NotImplementedError

    def child(self, node, rank: int) -> Node:
        if not 1 <= rank <= self.label(node):
            raise RankOutOfRange(f"rank {rank} outside 1..{self.label(node)}")
        return next(islice(self.successors(node), rank - 1, None))


def m_op(target: LinkPattern, i: int) -> LinkPattern:
    """The i-th preimage of ``target`` under the last generator.

    ``target`` must carry the link (2n-1, 0).  M_0 is the identity; for
    i >= 1 the i-th outermost arc (a, b) of the cut between 0 and 1 (the
    cap itself excluded) is rejoined as (a, 0), (b, 2n-1).
    """
    last = len(target) - 1
    if target[last] != 0:
        raise MissingLink(f"pattern has no link ({last},0)")
    if i < 0:
        raise RankOutOfRange(f"M_{i} is undefined")
    if i == 0:
        return target
    x = 1
    for _ in range(i - 1):
        if x >= last:
            break
        x = target[x] + 1
    if x >= last:
        raise RankOutOfRange(f"M_{i} needs {i} outermost links besides the cap")
    y = target[x]
    partner = list(target)
    partner[0], partner[x] = x, 0
    partner[y], partner[last] = last, y
    return LinkPattern._trusted(partner)


class LinkPatternRule(SuccessionRule):
    family = Family.LP

    def root(self) -> LinkPattern:
        return LinkPattern._trusted((1, 0))

    def label(self, pi) -> int:
        return exposure(pi, 0) + 1

    def successors(self, pi) -> Iterator[LinkPattern]:
        old = len(pi)
        last = old + 1
        # insert_strand(pi, 2n+1) written out: old 0 -> 2n, new link (2n+1, 0)
        base = [last, *[v or old for v in pi[1:]], pi[0], 0]
        trusted = LinkPattern._trusted
        x = 1
        while x < last:
            y = base[x]
            base[0], base[x], base[y], base[last] = x, 0, last, y
            yield trusted(base)
            base[0], base[x], base[y], base[last] = last, y, x, 0
            x = y + 1
        yield trusted(base)

    def child(self, pi, rank: int) -> LinkPattern:
        k = exposure(pi, 0)
        if not 1 <= rank <= k + 1:
            raise RankOutOfRange(f"rank {rank} outside 1..{k + 1}")
        prime = insert_strand(pi, len(pi) + 1)
        return m_op(prime, 0 if rank == k + 1 else rank)

    def parent(self, pi) -> LinkPattern:
        if len(pi) == 2:
            raise AtRoot("the one-strand pattern is the root")
        last = len(pi) - 1
        return delete_strand(apply_generator(pi, last).pattern, last)

    def child_rank(self, pi) -> int:
        if len(pi) == 2:
            raise AtRoot("the one-strand pattern is the root")
        return exposure(pi, 0)


class DyckRule(SuccessionRule):
    family = Family.DYCK

    def root(self) -> DyckPath:
        return DyckPath._trusted("UD")

    def label(self, d) -> int:
        return last_descent_length(d) + 1

    def successors(self, d) -> Iterator[DyckPath]:
        end = len(d)
        trusted = DyckPath._trusted
        # a peak at height h on the last descent gives last descent h + 1
        for h in range(last_descent_length(d) + 1):
            cut = end - h
            yield trusted(d[:cut] + "UD" + d[cut:])

    def child(self, d, rank: int) -> DyckPath:
        if not 1 <= rank <= self.label(d):
            raise RankOutOfRange(f"rank {rank} outside 1..{self.label(d)}")
        cut = len(d) - rank + 1
        return DyckPath._trusted(d[:cut] + "UD" + d[cut:])

    def parent(self, d) -> DyckPath:
        if len(d) == 2:
            raise AtRoot("UD is the root")
        j = d.rfind("U")
        return DyckPath._trusted(d[:j] + d[j + 2:])

    def child_rank(self, d) -> int:
        if len(d) == 2:
            raise AtRoot("UD is the root")
        return last_descent_length(d)


class PermRule(SuccessionRule):
    family = Family.PERM

    def root(self) -> Perm123:
        return Perm123._trusted((1,))

    def label(self, sigma) -> int:
        return first_ascent(sigma) + 1

    def successors(self, sigma) -> Iterator[Perm123]:
        top = (len(sigma) + 1,)
        trusted = Perm123._trusted
        # the prefix before the first ascent is decreasing, so placing the new
        # maximum right after entry r makes r the new first ascent
        for r in range(1, first_ascent(sigma) + 1):
            yield trusted(sigma[:r] + top + sigma[r:])
        yield trusted(top + sigma)

    def child(self, sigma, rank: int) -> Perm123:
        i = first_ascent(sigma)
        if not 1 <= rank <= i + 1:
            raise RankOutOfRange(f"rank {rank} outside 1..{i + 1}")
        top = (len(sigma) + 1,)
        if rank == i + 1:
            return Perm123._trusted(top + sigma)
        return Perm123._trusted(sigma[:rank] + top + sigma[rank:])

    def parent(self, sigma) -> Perm123:
        if len(sigma) == 1:
            raise AtRoot("the permutation 1 is the root")
        top = len(sigma)
        return Perm123._trusted(tuple(v for v in sigma if v != top))

    def child_rank(self, sigma) -> int:
        if len(sigma) == 1:
            raise AtRoot("the permutation 1 is the root")
        return first_ascent(sigma)


RULES: dict[Family, SuccessionRule] = {
    Family.LP: LinkPatternRule(),
    Family.DYCK: DyckRule(),
    Family.PERM: PermRule(),
}


def rule_for(node_or_family) -> SuccessionRule:
    if isinstance(node_or_family, (Family, str)) and not isinstance(node_or_family, DyckPath):
        return RULES[Family(node_or_family)]
    return RULES[node_or_family.family]


def tree_root(family) -> Node:
    return rule_for(family).root()


def label(node) -> int:
    return rule_for(node).label(node)


def children(node) -> list[Node]:
    return list(rule_for(node).successors(node))


def parent(node) -> Node:
    return rule_for(node).parent(node)


def child_rank(node) -> int:
    return rule_for(node).child_rank(node)


def check_code(code: Sequence[int]) -> tuple[int, ...]:
    code = tuple(code)
    bound = 2
    for t, r in enumerate(code):
        if not 1 <= r <= bound:
            raise InvalidCode(f"rank {r} at step {t + 1} outside 1..{bound}")
        bound = r + 1
    return code


def path_code(node) -> tuple[int, ...]:
    """Sibling ranks along the path from the root down to ``node``."""
    rule = rule_for(node)
    ranks = []
    while node.level > 1:
        ranks.append(rule.child_rank(node))
        node = rule.parent(node)
    return tuple(reversed(ranks))


def node_at(family, code: Sequence[int]) -> Node:
    rule = rule_for(family)
    node = rule.root()
    for r in check_code(code):
        node = rule.child(node, r)
    return node


@dataclass
class FrameProbe:
    """Records the deepest traversal stack seen by :func:`iterate_subtree`."""

    max_frames: int = 0
    nodes: int = 0


def iterate_subtree(node, n: int, probe: FrameProbe | None = None) -> Iterator[Node]:
    """Stream the level-``n`` descendants of ``node`` depth first, in rank order.

    The stack holds one successor iterator per level between ``node`` and
    ``n``; no level is ever materialised.
    """
    level = node.level
    if n < level:
        return
    if n == level:
        if probe is not None:
            probe.max_frames = max(probe.max_frames, 1)
            probe.nodes += 1
        yield node
        return
    successors = rule_for(node).successors
    stack = [successors(node)]
    leaf_depth = n - level
    if probe is not None:
        probe.max_frames = max(probe.max_frames, 1)
    while stack:
        if len(stack) == leaf_depth:
            if probe is None:
                yield from stack.pop()
            else:
                for leaf in stack.pop():
                    probe.nodes += 1
                    yield leaf
            continue
        child = next(stack[-1], None)
        if child is None:
            stack.pop()
            continue
        stack.append(successors(child))
        if probe is not None and len(stack) > probe.max_frames:
            probe.max_frames = len(stack)


def iterate_level(family, n: int, probe: FrameProbe | None = None) -> Iterator[Node]:
    """Every node of level ``n`` exactly once (sizes n, semilength n, length n)."""
    if n < 1:
        raise ValueError("levels start at 1")
    return iterate_subtree(tree_root(family), n, probe)
