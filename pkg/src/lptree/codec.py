"""Line-oriented text records.

    lp    n=2;0-1,2-3        canonical: (min,max) pairs sorted by first point
    dyck  UUDD
    perm  2 3 1
    code  2,3                empty line for the root

Statistics ride along after the record as tab-separated ``key=value`` fields.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from .dyck import DyckPath
from .errors import ParseError
from .family import Family
from .patterns import make_link_pattern
from .perms import Perm123
from .tree import Node, check_code

__all__ = [
    "encode",
    "parse_record",
    "encode_code",
    "parse_code",
    "format_stats",
    "split_record",
]

_LP_HEAD = re.compile(r"n=(\d+);")
_PAIR = re.compile(r"(\d+)-(\d+)")


def encode(node: Node) -> str:
    if node.family is Family.LP:
        body = ",".join(f"{a}-{b}" for a, b in node.pairs())
        return f"n={node.n};{body}"
    if node.family is Family.DYCK:
        return str.__str__(node)
    return " ".join(map(str, node))


def split_record(line: str) -> tuple[str, dict[str, str]]:
    """Separate a record from trailing ``key=value`` fields."""
    record, *fields = line.rstrip("\r\n").split("\t")
    extras = {}
    for f in fields:
        key, sep, value = f.partition("=")
        if sep:
            extras[key] = value
    return record, extras


def _parse_lp(text: str):
    head = _LP_HEAD.match(text)
    if head is None:
        raise ParseError("expected 'n=<strands>;'", 1)
    n = int(head.group(1))
    pos = head.end()
    pairs = []
    while pos < len(text):
        m = _PAIR.match(text, pos)
        if m is None:
            raise ParseError("expected '<a>-<b>'", pos + 1)
        pairs.append((int(m.group(1)), int(m.group(2))))
        pos = m.end()
        if pos < len(text):
            if text[pos] != ",":
                raise ParseError("expected ','", pos + 1)
            pos += 1
            if pos == len(text):
                raise ParseError("trailing ','", pos)
    return make_link_pattern(pairs, n)


def _parse_dyck(text: str) -> DyckPath:
    for col, ch in enumerate(text, 1):
        if ch not in "UD":
            raise ParseError(f"unexpected {ch!r} in Dyck word", col)
    if not text:
        raise ParseError("empty Dyck word", 1)
    return DyckPath(text)


def _parse_perm(text: str) -> Perm123:
    values = []
    for m in re.finditer(r"\S+", text):
        if not m.group().isdigit():
            raise ParseError(f"not a positive integer: {m.group()!r}", m.start() + 1)
        values.append(int(m.group()))
    if not values:
        raise ParseError("empty permutation", 1)
    return Perm123(values)


def parse_record(line: str, family) -> Node:
    """Decode one record; validation errors (Crossing, ...) propagate."""
    record, _ = split_record(line)
    record = record.strip()
    family = Family(family)
    if family is Family.LP:
        return _parse_lp(record)
    if family is Family.DYCK:
        return _parse_dyck(record)
    return _parse_perm(record)


def encode_code(code: Sequence[int]) -> str:
    return ",".join(map(str, code))


def parse_code(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    ranks = []
    col = 1
    for part in text.split(","):
        if not part.strip().isdigit():
            raise ParseError(f"bad rank {part!r}", col)
        ranks.append(int(part))
        col += len(part) + 1
    return check_code(ranks)


def format_stats(items: Iterable[tuple[str, object]]) -> str:
    return "".join(f"\t{k}={v}" for k, v in items)
