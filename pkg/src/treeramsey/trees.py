"""Finite rooted trees, replicas, claws and the ternary-in-binary embedding.

Vertices are path strings. Binary and ternary trees use child digits
(``"0"``/``"1"`` and ``"0"``/``"1"``/``"2"``); the Cayley truncation uses
reduced words, so it is the ball around the identity rooted at the identity.
The root is the empty string internally and ``"-"`` in text formats.

A tree of size parameter ``d`` has levels ``0 .. d-1``. The object is lazy:
``FiniteTree(kind, 10**9)`` is fine as a search host, only ``vertices()``
materializes anything.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from enum import Enum
from itertools import product

from . import words
from .words import ResourceLimitError

MAX_MATERIALIZED = 2_000_000

ROOT = ""


class TreeKind(str, Enum):
    BINARY = "binary"
    TERNARY = "ternary"
    CAYLEY = "cayley"


class TreeError(ValueError):
    pass


def _vertex_count(kind: TreeKind, d: int) -> int:
    if d <= 0:
        return 0
    if kind is TreeKind.BINARY:
        return 2**d - 1
    if kind is TreeKind.TERNARY:
        return (3**d - 1) // 2
    return words.ball_size(d - 1)


@dataclass(frozen=True)
class FiniteTree:
    kind: TreeKind
    d: int

    def __post_init__(self):
        object.__setattr__(self, "kind", TreeKind(self.kind))
        if self.d < 0:
            raise TreeError("tree size must be non-negative")

    @property
    def depth(self) -> int:
        """Index of the deepest level."""
        return self.d - 1

    @property
    def size(self) -> int:
        return _vertex_count(self.kind, self.d)

    @property
    def alphabet(self) -> str:
        return {"binary": "01", "ternary": "012", "cayley": words.LETTERS}[self.kind.value]

    def level(self, v: str) -> int:
        return len(v)

    def is_wellformed(self, v: str) -> bool:
        if self.kind is TreeKind.CAYLEY:
            return words.is_reduced(v)
        return all(ch in self.alphabet for ch in v)

    def contains(self, v: str) -> bool:
        return isinstance(v, str) and len(v) < self.d and self.is_wellformed(v)

    def check(self, v: str) -> None:
        if not self.contains(v):
            raise TreeError(f"vertex {format_vertex(v)!r} is not in {self}")

    def child_labels(self, v: str) -> str:
        if self.kind is TreeKind.CAYLEY:
            return words.successors(v)
        return self.alphabet

    def children(self, v: str) -> list[str]:
        if len(v) + 1 >= self.d:
            return []
        return [v + ch for ch in self.child_labels(v)]

    def parent(self, v: str) -> str | None:
        return v[:-1] if v else None

    def level_vertices(self, k: int) -> Iterator[str]:
        if not 0 <= k < self.d:
            return
        if self.kind is TreeKind.CAYLEY:
            yield from words.sphere(k)
        else:
            for t in product(self.alphabet, repeat=k):
                yield "".join(t)

    def vertices(self, cap: int = MAX_MATERIALIZED) -> list[str]:
        """All vertices in level order (children by digit / letter order)."""
        if self.size > cap:
            raise ResourceLimitError(f"{self} has {self.size} vertices, cap is {cap}")
        out: list[str] = []
        for k in range(self.d):
            out.extend(self.level_vertices(k))
        return out

    def leaves(self) -> list[str]:
        return list(self.level_vertices(self.d - 1))

    def __str__(self):
        return f"{self.kind.value} tree d={self.d}"


def make_tree(kind: TreeKind | str, d: int, cap: int = MAX_MATERIALIZED) -> FiniteTree:
    if d < 1:
        raise TreeError("d must be >= 1")
    t = FiniteTree(TreeKind(kind), d)
    if t.size > cap:
        raise ResourceLimitError(f"{t} has {t.size} vertices, cap is {cap}")
    return t


def format_vertex(v: str) -> str:
    return v if v else "-"


def parse_vertex(text: str) -> str:
    text = text.strip()
    return "" if text == "-" else text


def is_below(x: str, y: str) -> bool:
    """True when ``x`` is a (not necessarily proper) descendant of ``y``."""
    return x.startswith(y)


def comparable(x: str, y: str) -> bool:
    return is_below(x, y) or is_below(y, x)


def tree_distance(x: str, y: str) -> int:
    i = 0
    n = min(len(x), len(y))
    while i < n and x[i] == y[i]:
        i += 1
    return len(x) + len(y) - 2 * i


def branch(v: str, x: str) -> str:
    """Which neighbour of ``v`` the path to ``x`` leaves through.

    Returns the child label for descendants and ``"^"`` for everything else.
    In the Cayley tree this matches :func:`words.direction` up to naming the
    parent direction.
    """
    if x == v:
        raise TreeError("a vertex has no branch to itself")
    if x.startswith(v):
        return x[len(v)]
    return "^"


def kth_descendants(t: FiniteTree, u: str, k: int) -> list[str]:
    t.check(u)
    if k < 0 or len(u) + k > t.depth:
        raise TreeError(f"no level {len(u) + k} in {t}")
    out = [u]
    for _ in range(k):
        out = [c for v in out for c in t.children(v)]
    return out


@dataclass
class ReplicaMap:
    """An embedding of ``pattern`` into ``host``; ``map`` is keyed by pattern vertex."""

    pattern: FiniteTree
    host: FiniteTree
    map: dict[str, str]
    level_seq: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not self.level_seq:
            self.level_seq = derive_level_seq(self.pattern, self.map)

    def images(self, pattern_level: int) -> list[str]:
        return [self.map[p] for p in self.pattern.level_vertices(pattern_level)]

    @property
    def root_image(self) -> str:
        return self.map[ROOT]


def derive_level_seq(pattern: FiniteTree, mapping: Mapping[str, str]) -> tuple[int, ...]:
    seq = []
    for j in range(pattern.d):
        first = next(pattern.level_vertices(j))
        seq.append(len(mapping[first]))
    return tuple(seq)


def validate_replica(rm: ReplicaMap, *, strict: bool = False) -> bool:
    """Check the replica conditions.

    Every pattern level lands on the single host level ``level_seq[j]``,
    ancestry is preserved, and images of sibling vertices are incomparable.
    With ``strict`` the sibling images must moreover sit in distinct child
    subtrees of their parent's image.
    """
    pat, host, mp = rm.pattern, rm.host, rm.map
    verts = pat.vertices()
    if set(mp) != set(verts):
        return False
    for v in mp.values():
        host.check(v)
    if len(set(mp.values())) != len(verts):
        return False
    seq = rm.level_seq
    if len(seq) != pat.d or any(a >= b for a, b in zip(seq, seq[1:])):
        return False
    for p in verts:
        if len(mp[p]) != seq[len(p)]:
            return False
    for p in verts:
        kids = pat.children(p)
        img = mp[p]
        for c in kids:
            if not is_below(mp[c], img):
                return False
        for i, c1 in enumerate(kids):
            for c2 in kids[i + 1 :]:
                a, b = mp[c1], mp[c2]
                if comparable(a, b):
                    return False
                if strict and a[len(img)] == b[len(img)]:
                    return False
    # parent-child ancestry is transitive, so the full ancestry condition follows
    return True


def compose(inner: ReplicaMap, outer: ReplicaMap) -> ReplicaMap:
    """Replica of ``inner.pattern`` in ``outer.host`` through ``outer``."""
    if inner.host != outer.pattern:
        raise TreeError("inner host must be the outer pattern")
    mp = {p: outer.map[q] for p, q in inner.map.items()}
    seq = tuple(outer.level_seq[h] for h in inner.level_seq)
    return ReplicaMap(inner.pattern, outer.host, mp, seq)


def restrict(rm: ReplicaMap, j: int) -> ReplicaMap:
    """The replica of the top ``j`` pattern levels."""
    pat = FiniteTree(rm.pattern.kind, j)
    mp = {p: v for p, v in rm.map.items() if len(p) < j}
    return ReplicaMap(pat, rm.host, mp, rm.level_seq[:j])


# three of the four grandchildren, one per ternary child digit
TERNARY_SUFFIX = {"0": "00", "1": "01", "2": "10"}


def embed_ternary_in_binary(n: int) -> ReplicaMap:
    """Replica of the ternary tree with ``n // 2`` levels in the binary tree with ``n``."""
    if n < 1:
        raise TreeError("n must be >= 1")
    pat = FiniteTree(TreeKind.TERNARY, n // 2)
    host = FiniteTree(TreeKind.BINARY, n)
    mp = {p: "".join(TERNARY_SUFFIX[ch] for ch in p) for p in pat.vertices()}
    return ReplicaMap(pat, host, mp, tuple(range(0, 2 * pat.d, 2)))


def spread_path(origin: str, p: str, gaps: Iterable[int], filler: str = "0") -> str:
    """Image of pattern path ``p`` when level ``i+1`` sits ``gaps[i]`` levels below level ``i``.

    Step ``i`` takes child ``p[i]`` and then descends along ``filler``; sibling
    images therefore differ right below their parent's image.
    """
    out = [origin]
    for ch, g in zip(p, gaps):
        out.append(ch + filler * (g - 1))
    return "".join(out)


def full_level_replica(
    pattern: FiniteTree,
    host: FiniteTree,
    origin: str,
    levels: tuple[int, ...],
    filler: Callable[[str], str] | None = None,
) -> ReplicaMap:
    """Strict replica rooted at ``origin`` whose pattern level ``j`` sits at host level ``levels[j]``.

    Only valid when every path used exists in the host; for the Cayley host
    ``filler`` picks the continuation letter after a branching step.
    """
    gaps = [b - a for a, b in zip(levels, levels[1:])]
    mp: dict[str, str] = {}
    for p in pattern.vertices():
        if filler is None:
            mp[p] = spread_path(origin, p, gaps)
        else:
            v = origin
            for ch, g in zip(p, gaps):
                v += ch
                for _ in range(g - 1):
                    v += filler(v)
            mp[p] = v
    return ReplicaMap(pattern, host, mp, tuple(levels))


@dataclass
class Claw:
    center: str
    common_distance: int
    X: tuple[str, ...]
    Y: tuple[str, ...]
    Z: tuple[str, ...]
    depth: int

    def vertices(self) -> tuple[str, ...]:
        return self.X + self.Y + self.Z


def _metric(kind: TreeKind) -> tuple[Callable[[str, str], int], Callable[[str, str], str]]:
    if kind is TreeKind.CAYLEY:
        return words.distance, words.direction
    return tree_distance, branch


def claw_shape_ok(t: FiniteTree, c: Claw) -> bool:
    """Cardinalities, equal distances and three distinct branches at the center."""
    d = c.depth
    if d < 2 or c.common_distance < 1:
        return False
    size = 2 ** (d - 2)
    if len(c.X) != size or len(c.Y) != size or len(c.Z) != 1:
        return False
    allv = c.vertices()
    if len(set(allv)) != len(allv):
        return False
    if not t.contains(c.center) or not all(t.contains(v) for v in allv):
        return False
    dist, way = _metric(t.kind)
    if any(dist(c.center, v) != c.common_distance for v in allv):
        return False
    branches = []
    for group in (c.X, c.Y, c.Z):
        dirs = {way(c.center, v) for v in group}
        if len(dirs) != 1:
            return False
        branches.append(dirs.pop())
    return len(set(branches)) == 3


def validate_claw(t: FiniteTree, c: Claw, coloring) -> bool:
    if t.kind is TreeKind.BINARY:
        raise TreeError("claws live in cayley or ternary trees")
    if not claw_shape_ok(t, c):
        return False
    return len({coloring.color_of(v) for v in c.vertices()}) == 1
