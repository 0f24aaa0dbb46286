"""Verification suites run by ``lptree verify``.

Each suite returns a list of :class:`Check`; a suite passes when every check
does.  Level sweeps go through :func:`lptree.parallel.map_level`, so they
honour ``--jobs``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codec import encode
from .counting import catalan
from .dyck import last_descent_length, peaks
from .family import Family
from .oracle import brute_avoiders, brute_patterns, brute_preimages
from .parallel import TASKS, map_level
from .patterns import exposure, insert_strand
from .stats import convert, interaction
from .temperley_lieb import apply_generator, check_relations, preimages
from .tree import rule_for

__all__ = ["Check", "SUITES", "run_suite"]

ORACLE_MAX = 8


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}\t{self.suite}\t{self.name}\t{self.detail}".rstrip()


def _succession_task(nodes, family, arg):
    rule = rule_for(family)
    failures = []
    seen = 0
    for node in nodes:
        seen += 1
        lab = rule.label(node)
        kids = list(rule.successors(node))
        labels = [rule.label(k) for k in kids]
        if labels != list(range(2, lab + 2)):
            failures.append(f"{encode(node)}: child labels {labels} for label {lab}")
            continue
        for r, kid in enumerate(kids, 1):
            if rule.child_rank(kid) != r or rule.parent(kid) != node:
                failures.append(f"{encode(kid)}: rank/parent mismatch at rank {r}")
            if family is Family.LP:
                last = len(kid) - 1
                if apply_generator(kid, last).pattern != insert_strand(node, last):
                    failures.append(f"{encode(kid)}: e_{last} does not return the inserted parent")
                if exposure(kid, 0) != r:
                    failures.append(f"{encode(kid)}: exposure differs from rank {r}")
    return seen, failures


def _transport_task(nodes, family, arg):
    failures = []
    images = []
    for pi in nodes:
        d = convert(pi, Family.DYCK)
        images.append(str.__str__(d))
        if last_descent_length(d) != exposure(pi, 0):
            failures.append(f"{encode(pi)}: ldl {last_descent_length(d)} != exposure")
        if peaks(d) != interaction(pi) + 1:
            failures.append(f"{encode(pi)}: peaks {peaks(d)} != interaction + 1")
        if convert(d, Family.LP) != pi or convert(convert(pi, Family.PERM), Family.DYCK) != d:
            failures.append(f"{encode(pi)}: conversions do not compose")
    return images, failures


TASKS["succession"] = _succession_task
TASKS["transport"] = _transport_task


def _stream_set(family, m, jobs):
    lines = [x for shard in map_level(family, m, "records", False, jobs) for x in shard]
    return lines, set(lines)


def verify_oracle(n: int, jobs: int = 1) -> list[Check]:
    checks = []
    top = min(n, ORACLE_MAX)
    note = f" (capped at {ORACLE_MAX})" if n > ORACLE_MAX else ""
    for m in range(1, top + 1):
        lines, got = _stream_set(Family.LP, m, jobs)
        want = {encode(x) for x in brute_patterns(m)}
        checks.append(Check("oracle", f"lp level {m} = brute force{note}",
                            got == want and len(lines) == len(want), f"{len(lines)} streamed, {len(want)} expected"))
        lines, got = _stream_set(Family.PERM, m, jobs)
        want = {encode(x) for x in brute_avoiders(m)}
        checks.append(Check("oracle", f"perm level {m} = brute force{note}",
                            got == want and len(lines) == len(want), f"{len(lines)} streamed, {len(want)} expected"))
        if m >= 2:
            last = 2 * m - 1
            bad = []
            targets = [pi for pi in brute_patterns(m) if pi[last] == 0]
            for target in targets:
                built = preimages(target, last)
                if len(set(built)) != len(built) or set(built) != brute_preimages(target, last):
                    bad.append(encode(target))
            checks.append(Check("oracle", f"preimages of e_{last} at level {m}", not bad,
                                f"{len(targets)} targets" + (f", first bad {bad[0]}" if bad else "")))
    return checks


def verify_relations(n: int, jobs: int = 1) -> list[Check]:
    checks = []
    for m in range(1, n + 1):
        report = check_relations(m)
        failed = [r for r in report.records if not r.passed and r.relation != "3-literal"]
        checks.append(Check("relations", f"relations 1,2,3 (circular) n={m}", report.ok,
                            f"{len(report.records)} instances" + (f", first failure {failed[0]}" if failed else "")))
        if m >= 2:
            wit = report.literal_witness
            checks.append(Check("relations", f"e_0, e_{2 * m - 1} do not commute n={m}", wit is not None,
                                f"witness {encode(wit)}" if wit is not None else "no witness"))
    return checks


def verify_succession(n: int, jobs: int = 1) -> list[Check]:
    checks = []
    for family in Family:
        failures = []
        nodes = 0
        for m in range(1, n):
            for seen, bad in map_level(family, m, "succession", None, jobs):
                nodes += seen
                failures.extend(bad)
        checks.append(Check("succession", f"{family} West rule and rank coherence, levels < {n}",
                            not failures, f"{nodes} parents" + (f", first failure {failures[0]}" if failures else "")))
    for m in range(2, n + 1):
        lines, got = _stream_set(Family.LP, m, jobs)
        ok = len(lines) == len(got) == catalan(m)
        if m <= ORACLE_MAX:
            ok = ok and got == {encode(x) for x in brute_patterns(m)}
        checks.append(Check("succession", f"children of level {m - 1} partition LP_{m}", ok,
                            f"{len(lines)} children, {len(got)} distinct"))
    return checks


def verify_transport(n: int, jobs: int = 1) -> list[Check]:
    checks = []
    for m in range(1, n + 1):
        images, failures = [], []
        for imgs, bad in map_level(Family.LP, m, "transport", None, jobs):
            images.extend(imgs)
            failures.extend(bad)
        bijective = len(set(images)) == len(images) == catalan(m)
        checks.append(Check("transport", f"lp->dyck statistics level {m}", bijective and not failures,
                            f"{len(images)} images" + (f", first failure {failures[0]}" if failures else "")))
    return checks


SUITES = {
    "oracle": verify_oracle,
    "relations": verify_relations,
    "succession": verify_succession,
    "transport": verify_transport,
}


def run_suite(name: str, n: int, jobs: int = 1) -> list[Check]:
    if name == "all":
        return [c for fn in SUITES.values() for c in fn(n, jobs)]
    return SUITES[name](n, jobs)
