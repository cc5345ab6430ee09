"""Exhaustive oracles: complete replica search and the true minimal host depth.

These never take shortcuts from the constructive proofs, so they can check
them. The replica search backtracks over roots (canonical vertex order),
level sequences (lexicographic) and images, memoizing on
``(vertex, remaining levels, color)``; the certificate it returns is the first
one in that order, with images chosen greedily smallest-first.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .colorings import Coloring, color_vectors, enumeration_count
from .search import BudgetExhausted, ReplicaCertificate
from .trees import FiniteTree, ReplicaMap, TreeKind

MAX_ORACLE_VERTICES = 4096
MAX_ORACLE_COLORINGS = 1 << 22


class _Index:
    """Vertex numbering plus, per (vertex, deeper level), descendants grouped by child."""

    def __init__(self, t: FiniteTree):
        self.tree = t
        self.verts = t.vertices(cap=MAX_ORACLE_VERTICES)
        self.pos = {v: i for i, v in enumerate(self.verts)}
        self.level = [len(v) for v in self.verts]
        by_level: list[list[int]] = [[] for _ in range(t.d)]
        for i, v in enumerate(self.verts):
            by_level[len(v)].append(i)
        self.groups: dict[tuple[int, int], list[list[int]]] = {}
        for i, u in enumerate(self.verts):
            kids = t.child_labels(u) if len(u) + 1 < t.d else ""
            for L in range(len(u) + 1, t.d):
                grp = []
                for ch in kids:
                    pre = u + ch
                    grp.append([j for j in by_level[L] if self.verts[j].startswith(pre)])
                self.groups[(i, L)] = grp


@lru_cache(maxsize=16)
def _index(t: FiniteTree) -> _Index:
    return _Index(t)


def _search(ix: _Index, colors: Sequence[int], d: int, strict: bool) -> tuple[int, tuple[int, ...], dict[str, int]] | None:
    memo: dict[tuple[int, tuple[int, ...]], dict[str, int] | None] = {}
    depth = ix.tree.d

    def embed(u: int, rest: tuple[int, ...], c: int) -> dict[str, int] | None:
        if not rest:
            return {"": u}
        key = (u, rest)
        if key in memo:
            return memo[key]
        groups = ix.groups[(u, rest[0])]
        found: list[tuple[int, dict[str, int]]] = []
        for grp in groups:
            for x in grp:
                if colors[x] != c:
                    continue
                sub = embed(x, rest[1:], c)
                if sub is not None:
                    found.append((x, sub))
                    if strict:
                        break
                    if len(found) == 2:
                        break
            if len(found) == 2:
                break
        out = None
        if len(found) == 2:
            out = {"": u}
            for bit, (_, sub) in zip("01", found):
                for p, v in sub.items():
                    out[bit + p] = v
        memo[key] = out
        return out

    for u in range(len(ix.verts)):
        lu = ix.level[u]
        if depth - lu < d:
            continue
        for rest in combinations(range(lu + 1, depth), d - 1):
            mp = embed(u, rest, colors[u])
            if mp is not None:
                return colors[u], (lu, *rest), mp
    return None


def exhaustive_find_replica(
    t: FiniteTree, coloring: Coloring, d: int, *, strict: bool = True
) -> ReplicaCertificate | None:
    """First monochromatic replica of ``T_d^2`` in ``t``, or None if there is none.

    ``strict`` (default) requires sibling images in distinct child subtrees
    of the parent image, which is the shape the constructive finder builds;
    without it sibling images need only be incomparable.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    ix = _index(t)
    colors = [coloring.color_of(v) for v in ix.verts]
    res = _search(ix, colors, d, strict)
    if res is None:
        return None
    c, seq, mp = res
    pattern = FiniteTree(TreeKind.BINARY, d)
    rm = ReplicaMap(pattern, t, {p: ix.verts[i] for p, i in mp.items()}, seq)
    return ReplicaCertificate(rm, c, [f"exhaustive: levels={','.join(map(str, seq))}"])


def has_replica(t: FiniteTree, colors: Sequence[int], d: int, *, strict: bool = True) -> bool:
    """Existence check on a color vector in canonical vertex order."""
    return _search(_index(t), colors, d, strict) is not None


@dataclass
class MinNResult:
    n: int | None
    counterexample: Coloring | None
    checked: dict[int, int]


def counterexamples(n: int, r: int, d: int, *, strict: bool = True, start: int = 0, stop: int | None = None):
    """Color vectors of T_n^2 (lexicographic, optionally one index shard) with no replica of T_d^2."""
    t = FiniteTree(TreeKind.BINARY, n)
    for vec in color_vectors(t, r, start, stop, cap=MAX_ORACLE_COLORINGS):
        if not has_replica(t, vec, d, strict=strict):
            yield vec


def min_n_oracle(r: int, d: int, n_max: int, *, strict: bool = True) -> MinNResult:
    """Smallest n <= n_max such that every r-coloring of T_n^2 has a mono replica of T_d^2.

    Monotone in n (a replica in the top levels survives deepening), so the
    first such n is the minimum. On success the lexicographically smallest
    coloring of T_{n-1}^2 without a replica comes along (None when n = 1).
    """
    checked: dict[int, int] = {}
    last_bad: Coloring | None = None
    for n in range(1, n_max + 1):
        t = FiniteTree(TreeKind.BINARY, n)
        total = enumeration_count(t, r)
        if total > MAX_ORACLE_COLORINGS:
            raise BudgetExhausted(f"T_{n}^2 has {total} {r}-colorings, cap is {MAX_ORACLE_COLORINGS}")
        bad = next(counterexamples(n, r, d, strict=strict), None)
        checked[n] = total
        if bad is None:
            return MinNResult(n, last_bad, checked)
        last_bad = Coloring.from_vector(t, r, bad)
    return MinNResult(None, None, checked)
