from itertools import combinations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import lp
from lptree.dyck import DyckPath, last_descent_length
from lptree.errors import AtRoot, InvalidCode, MissingLink, RankOutOfRange
from lptree.family import Family
from lptree.oracle import brute_patterns, brute_preimages
from lptree.patterns import exposure, insert_strand
from lptree.perms import Perm123
from lptree.temperley_lieb import apply_generator
from lptree.tree import (
    FrameProbe,
    child_rank,
    children,
    iterate_level,
    iterate_subtree,
    label,
    m_op,
    node_at,
    parent,
    path_code,
    rule_for,
    tree_root,
)


def dyck(s):
    return DyckPath(s)


def perm(s):
    return Perm123(int(c) for c in s)


def all_dyck(n):
    out = []
    for bits in product("UD", repeat=2 * n):
        h = 0
        for b in bits:
            h += 1 if b == "U" else -1
            if h < 0:
                break
        else:
            if h == 0:
                out.append(DyckPath("".join(bits)))
    return out


def avoids_123(seq):
    return not any(a < b < c for a, b, c in combinations(seq, 3))


def test_roots():
    assert tree_root(Family.LP) == lp((0, 1)) and label(tree_root("lp")) == 2
    assert tree_root("dyck") == "UD" and last_descent_length(tree_root("dyck")) == 1
    assert tree_root("perm") == (1,)
    assert children(tree_root("perm")) == [perm("12"), perm("21")]


def test_labels():
    assert label(lp((1, 2), (3, 0))) == 3
    assert label(perm("21")) == 3 and label(perm("12")) == 2
    assert label(dyck("UUDD")) == 3


def test_m_op_examples():
    target = lp((1, 2), (3, 4), (5, 0))
    assert m_op(target, 1) == lp((0, 1), (2, 5), (3, 4))
    assert m_op(target, 2) == lp((1, 2), (3, 0), (4, 5))
    other = lp((1, 4), (2, 3), (5, 0))
    assert m_op(other, 0) == other and exposure(other, 0) == 2
    with pytest.raises(RankOutOfRange):
        m_op(other, 2)
    with pytest.raises(MissingLink):
        m_op(lp((0, 1), (2, 3)), 1)


@pytest.mark.parametrize("n", range(2, 8))
def test_m_op_properties(n):
    last = 2 * n - 1
    for target in brute_patterns(n):
        if target[last] != 0:
            continue
        k = exposure(target, 0) - 1
        for i in range(1, k + 1):
            out = m_op(target, i)
            assert apply_generator(out, last).pattern == target
            assert exposure(out, 0) == i


def test_children_examples():
    assert children(lp((0, 1))) == [lp((0, 1), (2, 3)), lp((1, 2), (3, 0))]
    assert [label(c) for c in children(lp((0, 1)))] == [2, 3]
    assert children(lp((0, 1), (2, 3))) == [lp((0, 1), (2, 3), (4, 5)), lp((1, 4), (2, 3), (5, 0))]
    kids = children(dyck("UUDD"))
    assert kids == ["UUDDUD", "UUDUDD", "UUUDDD"]
    assert [last_descent_length(k) for k in kids] == [1, 2, 3]
    assert children(perm("21")) == [perm("231"), perm("213"), perm("321")]
    assert [label(k) for k in children(perm("21"))] == [2, 3, 4]


def test_dyck_length_three_example():
    kids = children(dyck("UDUUUDDD"))
    assert [last_descent_length(k) for k in kids] == [1, 2, 3, 4]


@pytest.mark.parametrize("n", range(1, 7))
def test_lp_children_are_preimages_of_wrapped_insertion(n):
    for pi in brute_patterns(n):
        prime = insert_strand(pi, 2 * n + 1)
        kids = children(pi)
        assert set(kids) == brute_preimages(prime, 2 * n + 1)
        assert [exposure(k, 0) for k in kids] == list(range(1, len(kids) + 1))


@pytest.mark.parametrize("n", range(1, 8))
def test_perm_children_are_all_avoiding_insertions(n):
    for sigma in iterate_level("perm", n):
        inserted = {sigma[:p] + (n + 1,) + sigma[p:] for p in range(n + 1)}
        assert set(children(sigma)) == {s for s in inserted if avoids_123(s)}


@pytest.mark.parametrize("n", range(1, 7))
def test_dyck_children_cover_next_level_once(n):
    kids = [k for d in all_dyck(n) for k in children(d)]
    assert sorted(kids) == sorted(all_dyck(n + 1))


def test_parent_examples():
    assert parent(lp((0, 1), (2, 3), (4, 5))) == lp((0, 1), (2, 3))
    assert parent(lp((1, 2), (3, 4), (5, 0))) == lp((1, 2), (3, 0))
    assert parent(perm("312")) == perm("12")
    assert parent(dyck("UUUDDD")) == "UUDD"
    for root in (lp((0, 1)), dyck("UD"), perm("1")):
        with pytest.raises(AtRoot):
            parent(root)
        with pytest.raises(AtRoot):
            child_rank(root)


def test_child_rank_examples():
    assert child_rank(lp((1, 2), (3, 0))) == 2
    assert child_rank(dyck("UUDD")) == 2
    assert child_rank(perm("321")) == 3


@pytest.mark.parametrize("family", list(Family))
@pytest.mark.parametrize("n", range(1, 9))
def test_parent_child_round_trip(family, n):
    rule = rule_for(family)
    for node in iterate_level(family, n):
        for r, kid in enumerate(children(node), 1):
            assert parent(kid) == node
            assert child_rank(kid) == r
            assert rule.child(node, r) == kid


def test_path_code_examples():
    assert path_code(lp((1, 2), (3, 4), (5, 0))) == (2, 3)
    assert node_at("lp", [1, 2]) == lp((1, 4), (2, 3), (5, 0))
    assert node_at("dyck", [2, 3]) == "UUUDDD"
    assert path_code(tree_root("lp")) == ()


@pytest.mark.parametrize("code", [[3], [1, 3], [2, 0], [2, 3, 5]])
def test_invalid_codes(code):
    with pytest.raises(InvalidCode):
        node_at("lp", code)


@st.composite
def codes(draw, max_len=12):
    length = draw(st.integers(0, max_len))
    out, bound = [], 2
    for _ in range(length):
        r = draw(st.integers(1, bound))
        out.append(r)
        bound = r + 1
    return out


@given(codes(), st.sampled_from(list(Family)))
def test_path_code_node_at_inverse(code, family):
    node = node_at(family, code)
    assert node.level == len(code) + 1
    assert path_code(node) == tuple(code)


def test_iterate_level_examples():
    assert sum(1 for _ in iterate_level("lp", 4)) == 14
    assert set(iterate_level("lp", 3)) == brute_patterns(3)
    assert set(iterate_level("perm", 3)) == {perm(s) for s in ("132", "312", "231", "213", "321")}


@pytest.mark.parametrize("family", list(Family))
def test_stream_is_in_rank_order(family):
    codes_seen = [path_code(x) for x in iterate_level(family, 6)]
    assert codes_seen == sorted(codes_seen)


@pytest.mark.parametrize("family", list(Family))
@pytest.mark.parametrize("n", range(1, 11))
def test_west_rule(family, n):
    for node in iterate_level(family, n):
        assert [label(k) for k in children(node)] == list(range(2, label(node) + 2))


def test_probe_counts_frames():
    probe = FrameProbe()
    assert sum(1 for _ in iterate_level("dyck", 9, probe)) == 4862
    assert probe.nodes == 4862
    assert probe.max_frames <= 9


def test_subtree_split_reassembles_level():
    whole = list(iterate_level("lp", 7))
    parts = [x for top in iterate_level("lp", 3) for x in iterate_subtree(top, 7)]
    assert parts == whole
