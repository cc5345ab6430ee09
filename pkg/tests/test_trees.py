import random
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from treeramsey import words
from treeramsey.colorings import Coloring
from treeramsey.trees import (
    Claw,
    FiniteTree,
    ReplicaMap,
    TreeError,
    TreeKind,
    claw_shape_ok,
    compose,
    embed_ternary_in_binary,
    full_level_replica,
    kth_descendants,
    make_tree,
    restrict,
    tree_distance,
    validate_claw,
    validate_replica,
)

B, T, C = TreeKind.BINARY, TreeKind.TERNARY, TreeKind.CAYLEY


def identity_replica(kind, d):
    t = FiniteTree(kind, d)
    return ReplicaMap(t, t, {v: v for v in t.vertices()})


def gapped_replica():
    # T_3^2 into T_6^2 on levels 0, 2, 5
    mp = {
        "": "",
        "0": "01",
        "1": "10",
        "00": "01000",
        "01": "01100",
        "10": "10001",
        "11": "10110",
    }
    return ReplicaMap(FiniteTree(B, 3), FiniteTree(B, 6), mp, (0, 2, 5))


def test_make_tree_counts():
    assert make_tree("binary", 1).vertices() == [""]
    t = make_tree(B, 4)
    assert t.size == 15 and len(t.leaves()) == 8
    assert all(len(v) == 3 for v in t.leaves())
    c = make_tree(C, 3)
    assert c.size == 10
    assert sorted(c.vertices()) == sorted(words.ball(2))
    assert make_tree(T, 3).size == 13
    with pytest.raises(TreeError):
        make_tree(B, 0)


def test_cayley_children_are_reduced():
    t = FiniteTree(C, 5)
    assert t.children("") == ["a", "b", "c"]
    assert t.children("ab") == ["aba", "abc"]
    assert t.parent("ab") == "a"
    assert not t.contains("abb")
    assert not t.contains("ababa")


def test_kth_descendants():
    assert kth_descendants(FiniteTree(B, 3), "0", 0) == ["0"]
    assert len(kth_descendants(FiniteTree(B, 4), "", 2)) == 4
    assert sorted(kth_descendants(FiniteTree(C, 4), "", 2)) == sorted(words.sphere(2))
    with pytest.raises(TreeError):
        kth_descendants(FiniteTree(B, 3), "", 3)


def test_identity_replica_valid():
    for kind in (B, T, C):
        assert validate_replica(identity_replica(kind, 3), strict=True)


def test_siblings_in_same_child_subtree():
    mp = {"": "", "0": "00", "1": "01"}
    rm = ReplicaMap(FiniteTree(B, 2), FiniteTree(B, 3), mp)
    assert validate_replica(rm)  # incomparable, so a weak replica
    assert not validate_replica(rm, strict=True)
    mp = {"": "", "0": "0", "1": "00"}
    assert not validate_replica(ReplicaMap(FiniteTree(B, 2), FiniteTree(B, 3), mp, (0, 1)))


def test_gapped_replica():
    rm = gapped_replica()
    assert validate_replica(rm, strict=True)
    assert rm.level_seq == (0, 2, 5)


def test_replica_rejects_level_mixing_and_ancestry():
    rm = gapped_replica()
    bad = dict(rm.map, **{"11": "1011"})
    assert not validate_replica(ReplicaMap(rm.pattern, rm.host, bad, rm.level_seq))
    bad = dict(rm.map, **{"11": "01110"})
    assert not validate_replica(ReplicaMap(rm.pattern, rm.host, bad, rm.level_seq))


@pytest.mark.parametrize("n", range(1, 15))
def test_embed_ternary_in_binary(n):
    rm = embed_ternary_in_binary(n)
    assert rm.pattern.d == n // 2
    if rm.pattern.d:
        assert validate_replica(rm)
    if rm.pattern.d >= 2:
        # three children cannot occupy three distinct binary subtrees
        assert not validate_replica(rm, strict=True)


def test_embed_examples():
    assert embed_ternary_in_binary(2).map == {"": ""}
    rm = embed_ternary_in_binary(4)
    assert sorted(rm.images(1)) == ["00", "01", "10"]
    rm = embed_ternary_in_binary(7)
    assert rm.pattern.size == 13 and rm.level_seq == (0, 2, 4)


def test_compose_and_restrict():
    inner = gapped_replica()
    outer = identity_replica(B, 6)
    both = compose(inner, outer)
    assert both.map == inner.map and validate_replica(both, strict=True)
    tern = embed_ternary_in_binary(6)
    via = compose(ReplicaMap(FiniteTree(T, 2), tern.pattern, {"": "", "0": "0", "1": "1", "2": "2"}), tern)
    assert validate_replica(via)
    top = restrict(inner, 2)
    assert top.level_seq == (0, 2) and validate_replica(top, strict=True)


@given(st.integers(1, 5), st.lists(st.integers(1, 3), min_size=0, max_size=4))
def test_full_level_replica(d0, gaps):
    levels = [d0]
    for g in gaps:
        levels.append(levels[-1] + g)
    pat = FiniteTree(B, len(levels))
    host = FiniteTree(B, levels[-1] + 1)
    rm = full_level_replica(pat, host, "1" * d0, tuple(levels))
    assert validate_replica(rm, strict=True)


def test_tree_distance():
    assert tree_distance("010", "011") == 2
    assert tree_distance("", "0101") == 4


def test_validate_claw_examples():
    t = FiniteTree(C, 3)
    col = Coloring.constant(t, 1)
    good = Claw("", 1, ("a",), ("b",), ("c",), 2)
    assert validate_claw(t, good, col)
    assert not validate_claw(t, Claw("", 1, ("a",), ("b",), ("ca",), 2), col)
    assert not validate_claw(t, Claw("", 1, ("a",), ("a",), ("c",), 2), col)
    with pytest.raises(TreeError):
        validate_claw(FiniteTree(B, 3), good, col)


def test_validate_claw_colors_must_agree():
    t = FiniteTree(C, 3)
    col = Coloring.from_function(t, 2, lambda v: 1 if v == "c" else 0)
    assert not validate_claw(t, Claw("", 1, ("a",), ("b",), ("c",), 2), col)


def brute_claws(t, col, center, m, d):
    """Every depth-d claw at ``center`` with common distance m, by enumeration."""
    size = 2 ** (d - 2)
    by_branch = {}
    for v in t.vertices():
        if words.distance(center, v) == m:
            by_branch.setdefault(words.direction(center, v), []).append(v)
    for letters in product(by_branch, repeat=3):
        if len(set(letters)) < 3:
            continue
        for c in range(col.r):
            groups = [[v for v in by_branch[x] if col.color_of(v) == c] for x in letters]
            if len(groups[0]) >= size and len(groups[1]) >= size and groups[2]:
                yield Claw(center, m, tuple(groups[0][:size]), tuple(groups[1][:size]), (groups[2][0],), d)


def test_oracle_claw_on_random_coloring():
    t = FiniteTree(C, 4)
    rng = random.Random(7)
    found = 0
    for _ in range(20):
        table = {v: rng.randrange(2) for v in t.vertices()}
        col = Coloring.from_function(t, 2, table.__getitem__)
        for claw in brute_claws(t, col, "", 3, 3):
            assert claw_shape_ok(t, claw)
            assert validate_claw(t, claw, col)
            found += 1
    assert found > 0
