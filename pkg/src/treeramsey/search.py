"""Constructive search for monochromatic binary replicas.

The finder follows the induction on colors and depth:

* one color: the top ``d`` levels;
* two colors: grow the replica one level at a time. The slots are the
  children of the current leaf images. For ``k = 0, 1, ...`` either every slot
  has a descendant ``k`` levels down in the replica color (extend by one level),
  or the first slot that has none is charged with ``k``. Once a slot is charged
  ``d`` times its descendants at those ``d`` depths all carry the other color
  and span a new replica.
* more colors: merge all but the first into one pseudo color, find a replica
  of ``T_m`` with ``m = n_bound(r-1, d)``; it is either pure first color or an
  (r-1)-colored binary host to recurse into.

Every choice is the lexicographically smallest. The search is lazy, so rule
colorings on hosts far too deep to materialize work as long as the coloring
is not adversarial enough to exhaust the :class:`SearchBudget`.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from itertools import product

from . import bounds, words
from .colorings import Coloring
from .trees import FiniteTree, ReplicaMap, TreeKind, format_vertex, parse_vertex, spread_path


class SearchError(RuntimeError):
    pass


class PreconditionError(SearchError):
    pass


class BudgetExhausted(SearchError):
    pass


class HostTooShallow(SearchError):
    """The search needed a level the host does not have."""


class InternalContradiction(SearchError):
    """A proof step that cannot fail did; this is a defect, not an answer."""


@dataclass
class SearchBudget:
    max_levels_probed: int = 1_000_000
    max_vertices_queried: int = 20_000_000

    def __post_init__(self):
        if self.max_levels_probed < 1 or self.max_vertices_queried < 1:
            raise ValueError("budget limits must be positive")


class Probe:
    """Counts color queries against a budget and the host depth."""

    def __init__(self, color: Callable[[str], int], depth: int, budget: SearchBudget, r: int):
        self.color = color
        self.depth = depth
        self.budget = budget
        self.r = r
        self.queries = 0

    def __call__(self, v: str) -> int:
        if len(v) >= self.depth:
            raise HostTooShallow(f"level {len(v)} is outside a host with {self.depth} levels")
        if len(v) >= self.budget.max_levels_probed:
            raise BudgetExhausted(f"probe reached level {len(v)} (max_levels_probed)")
        self.queries += 1
        if self.queries > self.budget.max_vertices_queried:
            raise BudgetExhausted(f"more than {self.budget.max_vertices_queried} vertices queried")
        c = self.color(v)
        if not 0 <= c < self.r:
            raise PreconditionError(f"vertex {format_vertex(v)!r} has color {c}, not below r={self.r}")
        return c


def cayley_from_binary(path: str) -> str:
    """Binary address -> Cayley word: the identity keeps a, b; later vertices their two successors."""
    w = ""
    for bit in path:
        w += words.successors(w)[int(bit)]
    return w


def binary_from_cayley(w: str) -> str:
    out = []
    for i, ch in enumerate(w):
        out.append(str(words.successors(w[:i]).index(ch)))
    return "".join(out)


def embedding_for(kind: TreeKind) -> Callable[[str], str]:
    """Map binary addresses into a host of ``kind``; strict and level preserving."""
    if kind is TreeKind.CAYLEY:
        return cayley_from_binary
    return lambda p: p


@dataclass
class ReplicaCertificate:
    replica: ReplicaMap
    color: int
    trace: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        rm = self.replica
        return {
            "replica": {
                "pattern": {"kind": rm.pattern.kind.value, "d": rm.pattern.d},
                "host": {"kind": rm.host.kind.value, "d": rm.host.d},
                "map": [[format_vertex(p), format_vertex(rm.map[p])] for p in rm.pattern.vertices()],
                "level_seq": list(rm.level_seq),
            },
            "color": self.color,
            "trace": list(self.trace),
        }

    @classmethod
    def from_dict(cls, data: dict) -> ReplicaCertificate:
        rep = data["replica"]
        pat = FiniteTree(TreeKind(rep["pattern"]["kind"]), rep["pattern"]["d"])
        host = FiniteTree(TreeKind(rep["host"]["kind"]), rep["host"]["d"])
        mp = {parse_vertex(p): parse_vertex(h) for p, h in rep["map"]}
        rm = ReplicaMap(pat, host, mp, tuple(rep["level_seq"]))
        return cls(rm, data["color"], list(data["trace"]))

    def image_vertices(self) -> list[str]:
        return [self.replica.map[p] for p in self.replica.pattern.vertices()]


TRACE_KINDS = (
    "top-levels",
    "extend-by-descendants",
    "pigeonhole",
    "color-merge",
    "scan-hit",
    "fallback-ternary",
    "fallback-levels",
)


def trace_kind(step: str) -> str:
    return step.split(":", 1)[0]


def first_descendant(color: Callable[[str], int], base: str, k: int, target: int) -> str | None:
    """Lexicographically smallest descendant ``k`` levels below ``base`` with color ``target``."""
    if k == 0:
        return base if color(base) == target else None
    for tail in product("01", repeat=k):
        v = base + "".join(tail)
        if color(v) == target:
            return v
    return None


def _top_levels(d: int) -> dict[str, str]:
    return {p: p for p in FiniteTree(TreeKind.BINARY, d).vertices()}


def _two_colors(
    color: Callable[[str], int], d: int, palette: tuple[int, int], trace: list[str]
) -> tuple[dict[str, str], int]:
    """Mono replica of T_d^2 in a binary host colored from ``palette`` (two colors)."""
    mp = {"": ""}
    c = color("")
    trace.append("top-levels: d=1")
    for j in range(2, d + 1):
        other = palette[1] if c == palette[0] else palette[0]
        leaves = ["".join(t) for t in product("01", repeat=j - 2)]
        slots = [leaf + bit for leaf in leaves for bit in "01"]
        charged: dict[str, list[int]] = {s: [] for s in slots}
        for k in range(j * 2**j):
            chosen: dict[str, str] = {}
            witness = None
            for s in slots:
                x = first_descendant(color, mp[s[:-1]] + s[-1], k, c)
                if x is None:
                    witness = s
                    break
                chosen[s] = x
            if witness is None:
                mp.update(chosen)
                trace.append(f"extend-by-descendants: d={j} k={k}")
                break
            charged[witness].append(k)
            if len(charged[witness]) == j:
                ks = charged[witness]
                base = mp[witness[:-1]] + witness[-1]
                x = base + "0" * ks[0]
                gaps = [b - a for a, b in zip(ks, ks[1:])]
                pattern = FiniteTree(TreeKind.BINARY, j)
                mp = {p: spread_path(x, p, gaps) for p in pattern.vertices()}
                c = other
                trace.append(
                    f"pigeonhole: d={j} slot={format_vertex(witness)} depths={','.join(map(str, ks))}"
                )
                break
        else:
            raise InternalContradiction(f"no extension and no pigeonhole at d={j}")
    return mp, c


def _find(
    color: Callable[[str], int], d: int, palette: tuple[int, ...], trace: list[str]
) -> tuple[dict[str, str], int]:
    if len(palette) == 1:
        trace.append(f"top-levels: d={d}")
        return _top_levels(d), palette[0]
    if len(palette) == 2:
        return _two_colors(color, d, (palette[0], palette[1]), trace)
    m = bounds.n_bound(len(palette) - 1, d)
    if isinstance(m, bounds.Overflow):
        raise PreconditionError(f"n_bound({len(palette) - 1}, {d}) is too large to search")
    first = palette[0]

    def merged(v: str) -> int:
        return 0 if color(v) == first else 1

    trace.append(f"color-merge: r={len(palette)} m={m}")
    outer, pc = _two_colors(merged, m, (0, 1), trace)
    if pc == 0:
        trace.append(f"top-levels: d={d}")
        return {p: outer[p] for p in _top_levels(d)}, first
    def through(p: str) -> int:
        if len(p) >= m:
            raise HostTooShallow(f"level {len(p)} is outside the merged replica of {m} levels")
        return color(outer[p])

    inner, c = _find(through, d, palette[1:], trace)
    return {p: outer[q] for p, q in inner.items()}, c


def required_depth(r: int, d: int) -> int:
    n = bounds.n_bound(r, d)
    if isinstance(n, bounds.Overflow):
        raise PreconditionError(f"n_bound({r}, {d}) exceeds the exact evaluation cap")
    return n


def find_mono_binary_replica(
    host: FiniteTree,
    coloring: Coloring,
    r: int,
    d: int,
    budget: SearchBudget | None = None,
    *,
    enforce_bound: bool = True,
) -> ReplicaCertificate:
    """Monochromatic replica of ``T_d^2`` in ``host``.

    Ternary hosts are searched through their ``0``/``1`` children, Cayley
    hosts through the identity's ``a``/``b`` branches. Raises
    :class:`PreconditionError` when ``host`` is shallower than
    ``n_bound(r, d)`` (unless ``enforce_bound`` is off, in which case a too
    shallow host surfaces as :class:`HostTooShallow`).
    """
    if r < 1 or d < 1:
        raise PreconditionError("need r >= 1 and d >= 1")
    if coloring.r > r:
        raise PreconditionError(f"coloring declares {coloring.r} colors, more than r={r}")
    if enforce_bound:
        need = required_depth(r, d)
        if host.d < need:
            raise PreconditionError(f"host depth {host.d} is below n_bound({r}, {d}) = {need}")
    budget = budget or SearchBudget()
    embed = embedding_for(host.kind)
    probe = Probe(lambda p: coloring.color_of(embed(p)), host.d, budget, r)
    trace: list[str] = []
    mp, c = _find(probe, d, tuple(range(r)), trace)
    pattern = FiniteTree(TreeKind.BINARY, d)
    hmap = {p: embed(v) for p, v in mp.items()}
    return ReplicaCertificate(ReplicaMap(pattern, host, hmap), c, trace)


def is_monochromatic(cert: ReplicaCertificate, coloring: Coloring) -> bool:
    return all(coloring.color_of(v) == cert.color for v in cert.image_vertices())
