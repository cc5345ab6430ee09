"""Monochromatic regular k-gons in Z2*Z2*Z2 under the word metric.

Even k: a monochromatic binary replica deep enough that each branch at its
root image has k/2 leaf images; alternate between the two branches, so every
edge passes through the root image. Odd k: a monochromatic claw; alternate
between X and Y and close through Z, every edge passing through the center.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import bounds, words
from .claws import ClawCertificate, find_mono_claw
from .colorings import Coloring
from .search import PreconditionError, ReplicaCertificate, SearchBudget, find_mono_binary_replica
from .trees import FiniteTree, TreeKind


@dataclass
class Polygon:
    vertices: tuple[str, ...]
    edge_length: int
    color: int

    def to_dict(self) -> dict:
        return {
            "vertices": [words.format_word(v) for v in self.vertices],
            "edge_length": self.edge_length,
            "color": self.color,
        }

    @classmethod
    def from_dict(cls, data: dict) -> Polygon:
        return cls(
            tuple(words.parse_word(v, require_reduced=True) for v in data["vertices"]),
            data["edge_length"],
            data["color"],
        )


@dataclass
class GonResult:
    polygon: Polygon
    source: ReplicaCertificate | ClawCertificate
    bound: bounds.Tower
    within_bound: bounds.Order


def edge_lengths(vs: tuple[str, ...]) -> list[int]:
    return [words.distance(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


def validate_polygon(p: Polygon, coloring: Coloring) -> bool:
    vs = p.vertices
    if len(vs) < 3 or len(set(vs)) != len(vs):
        return False
    if not all(words.is_reduced(v) for v in vs):
        return False
    if p.edge_length < 1 or any(e != p.edge_length for e in edge_lengths(vs)):
        return False
    return all(coloring.color_of(v) == p.color for v in vs)


def interleave(xs, ys, tail=()) -> tuple[str, ...]:
    out = []
    for x, y in zip(xs, ys):
        out += [x, y]
    return tuple(out) + tuple(tail)


def bound_check(edge: int, r: int, k: int) -> tuple[bounds.Tower, bounds.Order]:
    kind = "edge-even" if k % 2 == 0 else "edge-odd"
    # for r = 1 the tower degenerates to the bare depth d, which the 2-per-level
    # edge length of any construction overshoots; callers decide what r covers
    tower = bounds.tower_upper_bound(kind, r, k)
    return tower, bounds.compare_tower(edge, tower)


def construct_gon(
    coloring: Coloring, r: int, k: int, budget: SearchBudget | None = None, *, host_depth: int | None = None
) -> GonResult:
    """Monochromatic regular k-gon for a coloring of the Cayley tree.

    ``host_depth`` defaults to the depth the bound requires; a table coloring
    must cover at least that many levels.
    """
    if k < 3:
        raise PreconditionError("a polygon needs k >= 3")
    if coloring.tree.kind is not TreeKind.CAYLEY:
        raise PreconditionError("polygons live in the Cayley tree")
    if k % 2 == 0:
        d = bounds.even_gon_depth(k)
        need = bounds.n_bound(r, d)
    else:
        d = bounds.odd_gon_depth(k)
        need = bounds.m_bound(r, d)
    if isinstance(need, bounds.Overflow):
        raise PreconditionError(f"required depth for k={k}, r={r} exceeds the exact evaluation cap")
    n = need if host_depth is None else host_depth
    if coloring.is_table and coloring.tree.d < n:
        raise PreconditionError(f"coloring covers {coloring.tree.d} levels, {n} are required")
    host = FiniteTree(TreeKind.CAYLEY, n)
    if k % 2 == 0:
        cert = find_mono_binary_replica(host, coloring, r, d, budget)
        rm = cert.replica
        half = k // 2
        leaves = rm.pattern.level_vertices(d - 1)
        xs, ys = [], []
        for p in leaves:
            (xs if p[0] == "0" else ys).append(rm.map[p])
        xs, ys = sorted(xs)[:half], sorted(ys)[:half]
        vs = interleave(xs, ys)
        edge = 2 * (rm.level_seq[-1] - rm.level_seq[0])
        poly = Polygon(vs, edge, cert.color)
        source: ReplicaCertificate | ClawCertificate = cert
    else:
        cc = find_mono_claw(host, coloring, r, d, budget)
        half = (k - 1) // 2
        claw = cc.claw
        vs = interleave(claw.X[:half], claw.Y[:half], claw.Z)
        poly = Polygon(vs, 2 * claw.common_distance, cc.color)
        source = cc
    tower, order = bound_check(poly.edge_length, r, k)
    return GonResult(poly, source, tower, order)
