"""Subtree sharding of a level stream across worker processes.

A level is split at a shallow level into subtrees addressed by path code.
Shards are returned in path-code order, which is the single-worker stream
order, so concatenated or merged results do not depend on the worker count.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Callable

from .codec import encode, format_stats
from .family import Family
from .stats import stat_record, statistic
from .tree import iterate_level, iterate_subtree, node_at, path_code

__all__ = ["shard_codes", "map_level", "TASKS"]


def shard_codes(family, n: int, jobs: int) -> list[tuple[int, ...]]:
    if jobs <= 1 or n <= 2:
        return [()]
    depth = 1
    while depth < n - 1 and sum(1 for _ in iterate_level(family, depth)) < 4 * jobs:
        depth += 1
    return [path_code(x) for x in iterate_level(family, depth)]


def _records(nodes, with_stats: bool) -> list[str]:
    if with_stats:
        return [encode(x) + format_stats(stat_record(x).items()) for x in nodes]
    return [encode(x) for x in nodes]


def _task_records(nodes, family, arg):
    return _records(nodes, bool(arg))


def _task_histogram(nodes, family, arg):
    fn = statistic(arg, family)
    return Counter(fn(x) for x in nodes)


def _task_count(nodes, family, arg):
    return sum(1 for _ in nodes)


TASKS: dict[str, Callable] = {
    "count": _task_count,
    "records": _task_records,
    "histogram": _task_histogram,
}


def _run_shard(family, code, n, task, arg):
    from . import verify  # noqa: F401  registers the verification tasks in workers

    family = Family(family)
    nodes = iterate_subtree(node_at(family, code), n)
    return TASKS[task](nodes, family, arg)


def map_level(family, n: int, task: str, arg=None, jobs: int = 1) -> list:
    """Run ``task`` over every shard of level ``n``; results in stream order."""
    family = Family(family)
    codes = shard_codes(family, n, jobs)
    if jobs <= 1 or len(codes) == 1:
        return [_run_shard(family, c, n, task, arg) for c in codes]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_run_shard, family.value, c, n, task, arg) for c in codes]
        return [f.result() for f in futures]
