"""Monochromatic 3-claws in the Cayley tree and in complete ternary trees.

Both finders start from a monochromatic binary replica of depth ``3 * d~``
(``d~ = d`` for two colors, ``m_bound(r-1, d)`` beyond) with root image
``v0``; the replica occupies two branches at ``v0`` and the third branch is
scanned at the replica's distances from ``v0``. A vertex of the replica color
there closes a claw centered at ``v0``. Otherwise the scanned levels of the
third branch avoid that color:

* ternary host: the scanned levels carry a strict ternary replica, which is
  monochromatic for two colors (claw read off directly) and an (r-1)-colored
  ternary host otherwise (recurse; claws centered at a vertex with all three
  sets below it transfer through strict replicas);
* Cayley host, two colors: two scanned levels ``A > B`` of equal parity are
  uniformly the other color, and a claw whose third set goes back up through
  the center's parent fits between them.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from itertools import product

from . import bounds, words
from .colorings import Coloring
from .search import (
    PreconditionError,
    Probe,
    ReplicaCertificate,
    SearchBudget,
    SearchError,
    _find,
    cayley_from_binary,
)
from .trees import Claw, FiniteTree, ReplicaMap, TreeKind, format_vertex, full_level_replica, parse_vertex


class UnsupportedCase(SearchError):
    """No sound completion of the construction is implemented for this case."""


@dataclass
class ClawCertificate:
    claw: Claw
    color: int
    host: FiniteTree
    trace: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        c = self.claw
        return {
            "claw": {
                "center": format_vertex(c.center),
                "common_distance": c.common_distance,
                "X": [format_vertex(v) for v in c.X],
                "Y": [format_vertex(v) for v in c.Y],
                "Z": [format_vertex(v) for v in c.Z],
                "depth": c.depth,
            },
            "color": self.color,
            "host": {"kind": self.host.kind.value, "d": self.host.d},
            "trace": list(self.trace),
        }

    @classmethod
    def from_dict(cls, data: dict) -> ClawCertificate:
        c = data["claw"]
        claw = Claw(
            parse_vertex(c["center"]),
            c["common_distance"],
            tuple(parse_vertex(v) for v in c["X"]),
            tuple(parse_vertex(v) for v in c["Y"]),
            tuple(parse_vertex(v) for v in c["Z"]),
            c["depth"],
        )
        host = FiniteTree(TreeKind(data["host"]["kind"]), data["host"]["d"])
        return cls(claw, data["color"], host, list(data["trace"]))


def required_claw_depth(r: int, d: int) -> int:
    n = bounds.m_bound(r, d)
    if isinstance(n, bounds.Overflow):
        raise PreconditionError(f"m_bound({r}, {d}) exceeds the exact evaluation cap")
    return n


def _smallest(vs, count: int) -> tuple[str, ...]:
    return tuple(sorted(vs)[:count])


def claw_from_ternary_replica(rm: ReplicaMap, coloring: Callable[[str], int], d: int) -> Claw:
    """Claw at the root image using pattern level ``d-1`` under children 0, 1 and 2.

    The three sets lie in distinct branches at the center only when the
    replica is strict (siblings in distinct child subtrees of the parent image).
    """
    if rm.pattern.kind is not TreeKind.TERNARY:
        raise ValueError("need a replica of a ternary tree")
    if d < 2 or rm.pattern.d < d:
        raise ValueError(f"replica of depth {rm.pattern.d} is too shallow for a claw of depth {d}")
    color_of = getattr(coloring, "color_of", coloring)
    if len({color_of(v) for v in rm.map.values()}) != 1:
        raise ValueError("replica is not monochromatic")
    level = [p for p in rm.pattern.level_vertices(d - 1)]
    size = 2 ** (d - 2)
    X = _smallest((rm.map[p] for p in level if p[0] == "0"), size)
    Y = _smallest((rm.map[p] for p in level if p[0] == "1"), size)
    Z = _smallest((rm.map[p] for p in level if p[0] == "2"), 1)
    return Claw(rm.map[""], rm.level_seq[d - 1] - rm.level_seq[0], X, Y, Z, d)


def _trivial_claw(d: int, labels: str) -> Claw:
    """Claw at the root with the three sets one level ``d-1`` below children ``labels``."""
    m = d - 1
    size = 2 ** (d - 2)

    def under(first: str, count: int) -> tuple[str, ...]:
        out = []
        if labels == words.LETTERS:
            for w in words.sphere(m, first=first):
                out.append(w)
                if len(out) == count:
                    break
        else:
            for t in product("012", repeat=m - 1):
                out.append(first + "".join(t))
                if len(out) == count:
                    break
        return tuple(out)

    return Claw("", m, under(labels[0], size), under(labels[1], size), under(labels[2], 1), d)


def _replica_sets(mp: dict[str, str], j: int, size: int, embed=lambda p: p):
    level = ["".join(t) for t in product("01", repeat=j)]
    X = _smallest((embed(mp[p]) for p in level if p[0] == "0"), size)
    Y = _smallest((embed(mp[p]) for p in level if p[0] == "1"), size)
    return X, Y


def _ternary_claw(
    color: Callable[[str], int], d: int, palette: tuple[int, ...], trace: list[str]
) -> tuple[Claw, int]:
    """Downward claw (all three sets below the center) in a ternary host."""
    if len(palette) == 1:
        trace.append(f"top-levels: claw d={d}")
        return _trivial_claw(d, "012"), palette[0]
    dt = d if len(palette) == 2 else bounds.m_bound(len(palette) - 1, d)
    if isinstance(dt, bounds.Overflow):
        raise PreconditionError(f"m_bound({len(palette) - 1}, {d}) is too large to search")
    dbar = 3 * dt
    mp, c = _find(color, dbar, palette, trace)
    v0 = mp[""]
    H = [len(mp["0" * j]) - len(v0) for j in range(dbar)]
    size = 2 ** (d - 2)
    for j in range(d - 1, dbar):
        for t in product("012", repeat=H[j] - 1):
            z = v0 + "2" + "".join(t)
            if color(z) == c:
                X, Y = _replica_sets(mp, j, size)
                trace.append(f"scan-hit: j={j} distance={H[j]}")
                return Claw(v0, H[j], X, Y, (z,), d), c
    # every scanned level of the third branch avoids c
    levels = tuple(len(v0) + H[j] for j in range(d - 1, dbar))
    K = len(levels)
    origin = v0 + "2" + "0" * (levels[0] - len(v0) - 1)
    pat = FiniteTree(TreeKind.TERNARY, K)
    psi = full_level_replica(pat, FiniteTree(TreeKind.TERNARY, levels[-1] + 1), origin, levels)
    rest = tuple(x for x in palette if x != c)
    trace.append(f"fallback-ternary: levels={K} colors={len(rest)}")
    if len(rest) == 1:
        return claw_from_ternary_replica(psi, color, d), rest[0]

    def through(p: str) -> int:
        if len(p) >= K:
            raise PreconditionError("fallback ternary host is too shallow")
        return color(psi.map[p])

    inner, ic = _ternary_claw(through, d, rest, trace)
    base = psi.level_seq
    mapped = Claw(
        psi.map[inner.center],
        base[len(inner.center) + inner.common_distance] - base[len(inner.center)],
        tuple(psi.map[v] for v in inner.X),
        tuple(psi.map[v] for v in inner.Y),
        tuple(psi.map[v] for v in inner.Z),
        d,
    )
    return mapped, ic


def _levels_claw(v0: str, third: str, levels: list[int], d: int) -> tuple[Claw, int, int] | None:
    """Claw inside branch ``third`` at ``v0`` using two uniformly colored distances.

    With ``A > B`` of equal parity and ``t = (A - B) / 2``: center at distance
    ``e = A - m`` from ``v0``; X and Y ``m`` further down its two children;
    Z goes up ``t`` steps and down ``m - t`` steps, landing at distance ``B``.
    """
    usable = sorted(x for x in set(levels) if x >= 2)
    for A in usable:
        for B in sorted((b for b in usable if b < A and (A - b) % 2 == 0), reverse=True):
            t = (A - B) // 2
            m = max(d - 1, t + 1)
            if m > A - t - 1:
                continue
            e = A - m
            y = next(words.sphere(e, first=third))
            down = words.successors(y)
            size = 2 ** (d - 2)

            def below(prefix: str, extra: int, count: int) -> tuple[str, ...]:
                out = []
                for tail in words.sphere(extra, first=None) if extra else [""]:
                    if tail and tail[0] == prefix[-1]:
                        continue
                    out.append(prefix + tail)
                    if len(out) == count:
                        break
                return tuple(out)

            X = below(y + down[0], m - 1, size)
            Y = below(y + down[1], m - 1, size)
            a = y[: e - t]
            other = [ch for ch in words.successors(a) if ch != y[e - t]][0]
            Z = below(a + other, m - t - 1, 1)
            claw = Claw(
                words.multiply(v0, y),
                m,
                tuple(words.multiply(v0, u) for u in X),
                tuple(words.multiply(v0, u) for u in Y),
                tuple(words.multiply(v0, u) for u in Z),
                d,
            )
            return claw, A, B
    return None


def _cayley_claw(
    color: Callable[[str], int], d: int, r: int, trace: list[str]
) -> tuple[Claw, int]:
    if r == 1:
        trace.append(f"top-levels: claw d={d}")
        return _trivial_claw(d, words.LETTERS), 0
    if r > 2:
        dt = bounds.m_bound(r - 1, d)
        if isinstance(dt, bounds.Overflow):
            raise PreconditionError(f"m_bound({r - 1}, {d}) is too large to search")
    else:
        dt = d
    dbar = 3 * dt
    mp, c = _find(lambda p: color(cayley_from_binary(p)), dbar, tuple(range(r)), trace)
    v0 = cayley_from_binary(mp[""])
    l1 = words.direction(v0, cayley_from_binary(mp["0"]))
    l2 = words.direction(v0, cayley_from_binary(mp["1"]))
    third = next(ch for ch in words.LETTERS if ch not in (l1, l2))
    H = [len(mp["0" * j]) - len(mp[""]) for j in range(dbar)]
    size = 2 ** (d - 2)
    for j in range(d - 1, dbar):
        for u in words.sphere(H[j], first=third):
            z = words.multiply(v0, u)
            if color(z) == c:
                X, Y = _replica_sets(mp, j, size, cayley_from_binary)
                trace.append(f"scan-hit: j={j} distance={H[j]}")
                return Claw(v0, H[j], X, Y, (z,), d), c
    if r > 2:
        raise UnsupportedCase(
            "the third branch avoids the replica color; no sound claw transfer exists "
            "for more than two colors in the Cayley metric"
        )
    found = _levels_claw(v0, third, H[d - 1 :], d)
    if found is None:
        raise SearchError("no pair of equal-parity scanned levels fits a claw")
    claw, A, B = found
    trace.append(f"fallback-levels: A={A} B={B}")
    return claw, 1 - c


def find_mono_claw(
    host: FiniteTree,
    coloring: Coloring,
    r: int,
    d: int,
    budget: SearchBudget | None = None,
    *,
    enforce_bound: bool = True,
) -> ClawCertificate:
    """Monochromatic 3-claw of depth ``d`` in a Cayley or ternary host."""
    if host.kind is TreeKind.BINARY:
        raise PreconditionError("claws need a cayley or ternary host")
    if r < 1 or d < 2:
        raise PreconditionError("need r >= 1 and d >= 2")
    if coloring.r > r:
        raise PreconditionError(f"coloring declares {coloring.r} colors, more than r={r}")
    if enforce_bound:
        need = required_claw_depth(r, d)
        if host.d < need:
            raise PreconditionError(f"host depth {host.d} is below m_bound({r}, {d}) = {need}")
    probe = Probe(coloring.color_of, host.d, budget or SearchBudget(), r)
    trace: list[str] = []
    if host.kind is TreeKind.CAYLEY:
        claw, c = _cayley_claw(probe, d, r, trace)
    else:
        claw, c = _ternary_claw(probe, d, tuple(range(r)), trace)
    return ClawCertificate(claw, c, host, trace)


__all__ = [
    "ClawCertificate",
    "ReplicaCertificate",
    "UnsupportedCase",
    "claw_from_ternary_replica",
    "find_mono_claw",
    "required_claw_depth",
]
