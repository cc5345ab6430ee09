from itertools import combinations

import pytest

from treeramsey.colorings import Coloring, color_vectors
from treeramsey.oracle import counterexamples, exhaustive_find_replica, has_replica, min_n_oracle
from treeramsey.search import BudgetExhausted, find_mono_binary_replica
from treeramsey.trees import FiniteTree, TreeKind, validate_replica

B = TreeKind.BINARY
ADVERSARIAL = (0, 0, 1, 1, 1, 0, 0)


def brute_d2(t, vec, strict):
    """Direct reading of the definition for a T_2^2 replica."""
    verts = t.vertices()
    col = dict(zip(verts, vec))
    for u in verts:
        for L in range(len(u) + 1, t.d):
            below = [x for x in verts if len(x) == L and x.startswith(u) and col[x] == col[u]]
            for x, y in combinations(below, 2):
                if not strict or x[len(u)] != y[len(u)]:
                    return True
    return False


@pytest.mark.parametrize("strict", [True, False])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_has_replica_matches_definition(n, strict):
    t = FiniteTree(B, n)
    for vec in color_vectors(t, 2):
        assert has_replica(t, vec, 2, strict=strict) == brute_d2(t, vec, strict)


def test_constant_always_found():
    for d in range(1, 5):
        t = FiniteTree(B, 5)
        cert = exhaustive_find_replica(t, Coloring.constant(t, 2, 1), d)
        assert cert is not None and cert.color == 1
        assert validate_replica(cert.replica, strict=True)
        assert cert.replica.level_seq == tuple(range(d))


def test_adversarial_none():
    t = FiniteTree(B, 3)
    col = Coloring.from_vector(t, 2, ADVERSARIAL)
    assert exhaustive_find_replica(t, col, 2) is None
    assert exhaustive_find_replica(t, col, 2, strict=False) is not None
    assert ADVERSARIAL in list(counterexamples(3, 2, 2))


def test_certificates_are_valid():
    t = FiniteTree(B, 5)
    for seed in range(50):
        col = Coloring.seeded_hash(t, 2, seed)
        for d in (2, 3):
            cert = exhaustive_find_replica(t, col, d)
            if cert is not None:
                assert validate_replica(cert.replica, strict=True)
                assert all(col(v) == cert.color for v in cert.image_vertices())


def test_agrees_with_constructive_finder():
    t = FiniteTree(B, 9)
    for seed in range(20):
        col = Coloring.seeded_hash(t, 2, seed)
        find_mono_binary_replica(t, col, 2, 2)
        assert exhaustive_find_replica(t, col, 2) is not None


def test_min_n_small():
    assert min_n_oracle(2, 1, 3).n == 1
    res = min_n_oracle(2, 2, 3)
    assert res.n is None
    assert min_n_oracle(1, 3, 5).n == 3


def test_min_n_r2_d2():
    res = min_n_oracle(2, 2, 4)
    assert res.n == 4
    assert res.checked == {1: 2, 2: 8, 3: 128, 4: 32768}
    bad = res.counterexample
    assert bad.tree == FiniteTree(B, 3)
    assert exhaustive_find_replica(bad.tree, bad, 2) is None


def test_weak_min_n():
    res = min_n_oracle(2, 2, 4, strict=False)
    assert res.n is not None and res.n <= 4


def test_enumeration_cap():
    with pytest.raises(BudgetExhausted):
        min_n_oracle(2, 3, 6)
