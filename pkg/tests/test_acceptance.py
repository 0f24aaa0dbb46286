"""Exit criteria of the package, one test per criterion.

Every check is exact (integer equality or set equality); the only numeric
tolerance is the 60 s wall-clock budget for streaming the 14-strand level.
Each test records a PASS/FAIL line that is echoed in the pytest summary.
"""

import time
from collections import Counter

import pytest

from lptree.codec import encode, parse_record
from lptree.counting import catalan, count_by_exposure, count_by_interaction, histogram
from lptree.dyck import last_descent_length, peaks
from lptree.errors import Crossing
from lptree.family import Family
from lptree.oracle import all_pairings, brute_avoiders, brute_patterns, brute_preimages
from lptree.patterns import exposure
from lptree.stats import convert, interaction
from lptree.temperley_lieb import apply_word, check_relations, preimages
from lptree.tree import FrameProbe, children, iterate_level, label

RESULTS: list[str] = []


def record(number: int, title: str, ok: bool, detail: str = "") -> None:
    RESULTS.append(f"criterion {number} {'PASS' if ok else 'FAIL'}: {title}" + (f" ({detail})" if detail else ""))
    print(RESULTS[-1])
    assert ok, RESULTS[-1]


@pytest.fixture(scope="module")
def level14():
    probe = FrameProbe()
    start = time.perf_counter()
    count = sum(1 for _ in iterate_level(Family.LP, 14, probe))
    return count, time.perf_counter() - start, probe


def test_c1_cardinality(level14):
    counts = {n: sum(1 for _ in iterate_level(Family.LP, n)) for n in range(1, 14)}
    count14, elapsed, _ = level14
    counts[14] = count14
    ok = all(counts[n] == catalan(n) for n in counts)
    ok = ok and counts[4] == 14 and counts[14] == 2_674_440 and elapsed <= 60.0
    record(1, "|LP_n| = C_n for n <= 14, n=14 within 60 s", ok, f"C_14={count14}, {elapsed:.1f} s")


def test_c2_oracle_equivalence():
    bad = []
    for n in range(1, 9):
        if set(iterate_level(Family.LP, n)) != brute_patterns(n):
            bad.append(f"lp{n}")
        if set(iterate_level(Family.PERM, n)) != brute_avoiders(n):
            bad.append(f"perm{n}")
    record(2, "streams equal brute-force oracles for n <= 8", not bad, ", ".join(bad) or "C_8 = 1430")


def test_c3_west_rule():
    bad = 0
    checked = 0
    for family in Family:
        for n in range(1, 11):
            for node in iterate_level(family, n):
                checked += 1
                labels = Counter(label(k) for k in children(node))
                if labels != Counter(range(2, label(node) + 2)):
                    bad += 1
    record(3, "children labels are {2..k+1} at levels <= 10", bad == 0, f"{checked} nodes, {bad} violations")


def test_c4_preimage_theorem():
    bad = []
    for n in range(2, 9):
        last = 2 * n - 1
        basis = brute_patterns(n)
        for target in basis:
            if target[last] == 0:
                built = preimages(target, last)
                if len(built) != len(set(built)) or set(built) != brute_preimages(target, last):
                    bad.append(encode(target))
        kids = [k for p in iterate_level(Family.LP, n - 1) for k in children(p)]
        if len(kids) != len(set(kids)) or set(kids) != basis:
            bad.append(f"partition n={n}")
    record(4, "constructive preimages = scan, children partition LP_n, n <= 8", not bad, ", ".join(bad[:3]))


def test_c5_relations():
    bad = []
    for n in range(1, 7):
        report = check_relations(n)
        if not report.ok:
            bad.append(f"n={n}")
        if n >= 2:
            wit = report.literal_witness
            size = 2 * n
            if wit is None or apply_word(wit, [size - 1, 0]).pattern == apply_word(wit, [0, size - 1]).pattern:
                bad.append(f"literal n={n}")
    record(5, "TL relations (1),(2),(3 circular) hold n <= 6; (e_0,e_{2n-1}) witness stored", not bad,
           ", ".join(bad))


def test_c6_refined_counts():
    bad = []
    for n in range(1, 13):
        by_exposure = {k: count_by_exposure(n, k) for k in range(1, n + 1)}
        by_interaction = {l: count_by_interaction(n, l) for l in range(n)}
        if histogram(Family.LP, n, "exposure") != by_exposure:
            bad.append(f"exposure n={n}")
        if histogram(Family.LP, n, "interaction") != by_interaction:
            bad.append(f"interaction n={n}")
        if histogram(Family.DYCK, n, "ldl") != by_exposure:
            bad.append(f"ldl n={n}")
        if histogram(Family.DYCK, n, "peaks") != {l + 1: c for l, c in by_interaction.items()}:
            bad.append(f"peaks n={n}")
    record(6, "ballot and Narayana histograms exact for n <= 12", not bad, ", ".join(bad))


def test_c7_bijection_transport():
    bad = []
    for n in range(1, 11):
        images = set()
        for pi in iterate_level(Family.LP, n):
            d = convert(pi, Family.DYCK)
            images.add(d)
            if last_descent_length(d) != exposure(pi, 0) or peaks(d) != interaction(pi) + 1:
                bad.append(encode(pi))
        if len(images) != catalan(n) or images != set(iterate_level(Family.DYCK, n)):
            bad.append(f"not bijective n={n}")
    record(7, "convert is bijective, ldl = exposure, peaks = interaction + 1, levels <= 10", not bad,
           ", ".join(bad[:3]))


def test_c8_streaming_memory(level14):
    count, _, probe = level14
    ok = probe.max_frames <= 14 + 1 and probe.nodes == count == catalan(14)
    record(8, "iterate_level(LP, 14) holds at most n+1 frames", ok, f"max frames {probe.max_frames}")


def test_c9_round_trip():
    bad = []
    for family in Family:
        for n in range(1, 11):
            for node in iterate_level(family, n):
                if parse_record(encode(node), family) != node:
                    bad.append(encode(node))
    rejected = 0
    crossing = 0
    for n in range(2, 5):
        basis = {encode(pi) for pi in brute_patterns(n)}
        for pairs in all_pairings(range(2 * n)):
            text = f"n={n};" + ",".join(f"{a}-{b}" for a, b in sorted(pairs))
            if text in basis:
                continue
            crossing += 1
            try:
                parse_record(text, Family.LP)
            except Crossing:
                rejected += 1
    ok = not bad and crossing > 0 and rejected == crossing
    record(9, "decode(encode(x)) = x for n <= 10; crossing inputs rejected", ok,
           f"{rejected}/{crossing} crossing inputs rejected")
