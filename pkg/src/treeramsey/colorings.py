"""Vertex colorings: explicit tables and pure rules on paths.

Colors are 0-based (``0 .. r-1``). File format, UTF-8, one record per line::

    tree <binary|ternary|cayley> <d> colors <r>
    <path> <color>          # table: one line per vertex, root is "-"
    rule <name> [params]    # or a single rule line

Built-in rules:

``constant c``
    every vertex gets ``c``.
``level_mod``
    ``level % r``.
``first_letter``
    Cayley only; index of the first letter in ``abc`` mod ``r``, identity 0.
``seeded_hash seed``
    SplitMix64 chain over the path bytes. The state starts at
    ``mix(seed mod 2**64)`` and absorbs each ASCII byte ``b`` of the path as
    ``state = mix(state ^ b)``; the color is ``state % r``. ``mix`` is the
    SplitMix64 finalizer with increment ``0x9E3779B97F4A7C15`` and multipliers
    ``0xBF58476D1CE4E5B9``, ``0x94D049BB133111EB`` (shifts 30, 27, 31). The
    root's byte string is empty.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator, Mapping
from dataclasses import dataclass, field
from itertools import islice, product

from .trees import FiniteTree, TreeKind, format_vertex, parse_vertex

MASK64 = (1 << 64) - 1
MAX_ENUMERATION = 1 << 24
RULES = ("constant", "level_mod", "first_letter", "seeded_hash")


class ColoringError(ValueError):
    pass


def splitmix64(z: int) -> int:
    z = (z + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def path_hash(seed: int, path: str) -> int:
    h = splitmix64(seed & MASK64)
    for b in path.encode("ascii"):
        h = splitmix64(h ^ b)
    return h


@dataclass
class Coloring:
    """A total coloring of ``tree`` with ``r`` colors.

    Exactly one of ``table`` / ``rule`` is set. ``func`` backs ad-hoc rules
    built in code (``from_function``); those cannot be serialized.
    """

    tree: FiniteTree
    r: int
    table: dict[str, int] | None = None
    rule: tuple[str, tuple[int, ...]] | None = None
    func: Callable[[str], int] | None = field(default=None, repr=False)
    _hstate: dict[str, int] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if self.r < 1:
            raise ColoringError("need at least one color")
        if (self.table is None) == (self.rule is None and self.func is None):
            raise ColoringError("a coloring is either a table or a rule")
        if self.table is not None and any(not 0 <= c < self.r for c in self.table.values()):
            raise ColoringError(f"table color outside 0..{self.r - 1}")
        if self.rule is not None:
            name, params = self.rule
            if name not in RULES:
                raise ColoringError(f"unknown rule {name!r}")
            if name == "constant" and (len(params) != 1 or not 0 <= params[0] < self.r):
                raise ColoringError("constant needs one color < r")
            if name == "seeded_hash" and len(params) != 1:
                raise ColoringError("seeded_hash needs a seed")
            if name == "first_letter" and self.tree.kind is not TreeKind.CAYLEY:
                raise ColoringError("first_letter is defined on the cayley tree only")
            if name in ("level_mod", "first_letter") and params:
                raise ColoringError(f"{name} takes no parameters")

    @classmethod
    def constant(cls, tree: FiniteTree, r: int, c: int = 0) -> Coloring:
        return cls(tree, r, rule=("constant", (c,)))

    @classmethod
    def level_mod(cls, tree: FiniteTree, r: int) -> Coloring:
        return cls(tree, r, rule=("level_mod", ()))

    @classmethod
    def seeded_hash(cls, tree: FiniteTree, r: int, seed: int) -> Coloring:
        return cls(tree, r, rule=("seeded_hash", (seed,)))

    @classmethod
    def first_letter(cls, tree: FiniteTree, r: int) -> Coloring:
        return cls(tree, r, rule=("first_letter", ()))

    @classmethod
    def from_function(cls, tree: FiniteTree, r: int, fn: Callable[[str], int]) -> Coloring:
        return cls(tree, r, func=fn)

    @classmethod
    def from_vector(cls, tree: FiniteTree, r: int, colors) -> Coloring:
        verts = tree.vertices()
        if len(colors) != len(verts):
            raise ColoringError("color vector length differs from vertex count")
        return cls(tree, r, table=dict(zip(verts, (int(c) for c in colors))))

    @property
    def is_table(self) -> bool:
        return self.table is not None

    def _hash_state(self, v: str) -> int:
        st = self._hstate.get(v)
        if st is not None:
            return st
        if v:
            parent = self._hstate.get(v[:-1])
            if parent is not None:
                st = splitmix64(parent ^ ord(v[-1]))
            else:
                st = path_hash(self.rule[1][0], v)
        else:
            st = path_hash(self.rule[1][0], v)
        if len(self._hstate) < 1 << 20:
            self._hstate[v] = st
        return st

    def color_of(self, v: str) -> int:
        if self.table is not None:
            try:
                return self.table[v]
            except KeyError:
                raise ColoringError(f"no color for vertex {format_vertex(v)!r}") from None
        if not self.tree.is_wellformed(v):
            raise ColoringError(f"malformed path {v!r} for a {self.tree.kind.value} tree")
        if self.func is not None:
            return self.func(v) % self.r
        name, params = self.rule
        if name == "constant":
            return params[0]
        if name == "level_mod":
            return len(v) % self.r
        if name == "first_letter":
            return ("abc".index(v[0]) if v else 0) % self.r
        return self._hash_state(v) % self.r

    def __call__(self, v: str) -> int:
        return self.color_of(v)

    def colors_used(self) -> set[int]:
        if self.table is not None:
            return set(self.table.values())
        return set(range(self.r))

    def vector(self) -> tuple[int, ...]:
        return tuple(self.color_of(v) for v in self.tree.vertices())


def _header(c: Coloring) -> str:
    return f"tree {c.tree.kind.value} {c.tree.d} colors {c.r}"


def serialize_coloring(c: Coloring) -> str:
    if c.func is not None:
        raise ColoringError("ad-hoc function colorings have no text form")
    lines = [_header(c)]
    if c.table is not None:
        for v in c.tree.vertices():
            lines.append(f"{format_vertex(v)} {c.table[v]}")
    else:
        name, params = c.rule
        lines.append(" ".join(["rule", name, *map(str, params)]))
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> Coloring:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ColoringError("bad header: empty input")
    head = lines[0].split()
    if len(head) != 5 or head[0] != "tree" or head[3] != "colors":
        raise ColoringError(f"bad header: {lines[0]!r}")
    try:
        tree = FiniteTree(TreeKind(head[1]), int(head[2]))
        r = int(head[4])
    except ValueError as exc:
        raise ColoringError(f"bad header: {lines[0]!r}") from exc
    if tree.d < 1:
        raise ColoringError("bad header: tree size must be >= 1")
    body = lines[1:]
    if body and body[0].split()[0] == "rule":
        if len(body) != 1:
            raise ColoringError("a rule coloring has exactly one rule line")
        parts = body[0].split()
        if len(parts) < 2:
            raise ColoringError("rule line needs a name")
        try:
            params = tuple(int(p) for p in parts[2:])
        except ValueError as exc:
            raise ColoringError(f"bad rule parameters: {body[0]!r}") from exc
        return Coloring(tree, r, rule=(parts[1], params))
    table: dict[str, int] = {}
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise ColoringError(f"bad table line: {ln!r}")
        v = parse_vertex(parts[0])
        if not tree.contains(v):
            raise ColoringError(f"vertex {parts[0]!r} is not in the declared tree")
        if v in table:
            raise ColoringError(f"duplicate vertex line: {parts[0]!r}")
        try:
            col = int(parts[1])
        except ValueError as exc:
            raise ColoringError(f"bad color in line {ln!r}") from exc
        if not 0 <= col < r:
            raise ColoringError(f"color {col} is not below r={r}")
        table[v] = col
    if len(table) != tree.size:
        raise ColoringError("incomplete table")
    return Coloring(tree, r, table=table)


def enumeration_count(tree: FiniteTree, r: int) -> int:
    return r**tree.size


def color_vectors(
    tree: FiniteTree, r: int, start: int = 0, stop: int | None = None, cap: int = MAX_ENUMERATION
) -> Iterator[tuple[int, ...]]:
    """Color vectors in lexicographic order; ``[start, stop)`` selects a shard by index."""
    total = enumeration_count(tree, r)
    stop = total if stop is None else min(stop, total)
    if stop - start > cap:
        raise ColoringError(f"would enumerate {stop - start} colorings, cap is {cap}")
    it = product(range(r), repeat=tree.size)
    return islice(it, start, stop)


def enumerate_colorings(
    tree: FiniteTree, r: int, start: int = 0, stop: int | None = None, cap: int = MAX_ENUMERATION
) -> Iterator[Coloring]:
    verts = tree.vertices()
    for vec in color_vectors(tree, r, start, stop, cap):
        yield Coloring(tree, r, table=dict(zip(verts, vec)))


def recolor(c: Coloring, mapping: Mapping[int, int], r: int) -> Coloring:
    """Pointwise color substitution, e.g. merging colors."""
    return Coloring.from_function(c.tree, r, lambda v: mapping[c.color_of(v)])
