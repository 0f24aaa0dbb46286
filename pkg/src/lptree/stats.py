"""Per-node statistics and the bijections induced by the generating tree."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .dyck import DyckPath, last_descent_length, peaks
from .errors import DomainError
from .family import Family
from .patterns import LinkPattern, exposure
from .perms import first_ascent
from .tree import Node, node_at, path_code, rule_for

__all__ = [
    "StatRecord",
    "interaction",
    "stat_record",
    "convert",
    "STATISTICS",
    "statistic",
]


def interaction(pi: LinkPattern) -> int:
    """Number of non-M_0 edges on the root path of ``pi``.

    A level-m ancestor was reached by M_0 exactly when it still carries the
    freshly inserted link (2m-1, 0).
    """
    rule = rule_for(Family.LP)
    count = 0
    while len(pi) > 2:
        if pi[-1] != 0:
            count += 1
        pi = rule.parent(pi)
    return count


@dataclass(frozen=True)
class StatRecord:
    family: Family
    exposure: int | None = None
    interaction: int | None = None
    last_descent_length: int | None = None
    peaks: int | None = None
    first_ascent_label: int | None = None

    def items(self) -> list[tuple[str, int]]:
        keys = ("exposure", "interaction", "last_descent_length", "peaks", "first_ascent_label")
        return [(k, getattr(self, k)) for k in keys if getattr(self, k) is not None]


def stat_record(node: Node) -> StatRecord:
    if node.family is Family.LP:
        return StatRecord(Family.LP, exposure=exposure(node, 0), interaction=interaction(node))
    if node.family is Family.DYCK:
        return StatRecord(
            Family.DYCK, last_descent_length=last_descent_length(node), peaks=peaks(node)
        )
    return StatRecord(Family.PERM, first_ascent_label=first_ascent(node) + 1)


def convert(node: Node, target) -> Node:
    """Send ``node`` to the node with the same path code in the ``target`` tree."""
    target = Family(target)
    if node.family is target:
        return node
    return node_at(target, path_code(node))


STATISTICS: dict[str, tuple[frozenset, Callable[[Node], int]]] = {
    "exposure": (frozenset({Family.LP}), lambda pi: exposure(pi, 0)),
    "interaction": (frozenset({Family.LP}), interaction),
    "ldl": (frozenset({Family.DYCK}), last_descent_length),
    "peaks": (frozenset({Family.DYCK}), peaks),
    "first_ascent": (frozenset({Family.PERM}), lambda s: first_ascent(s) + 1),
    "label": (frozenset(Family), lambda node: rule_for(node).label(node)),
}


def statistic(name: str, family) -> Callable[[Node], int]:
    family = Family(family)
    try:
        families, fn = STATISTICS[name]
    except KeyError:
        raise DomainError(f"unknown statistic {name!r}") from None
    if family not in families:
        raise DomainError(f"statistic {name!r} does not apply to {family}")
    return fn
