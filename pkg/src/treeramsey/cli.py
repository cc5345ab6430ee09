"""Command-line front end.

Exit status: 0 success, 1 nothing found (oracle), 2 usage or input error,
3 precondition or budget failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds, words
from .claws import ClawCertificate, find_mono_claw, required_claw_depth
from .colorings import Coloring, ColoringError, parse_coloring, serialize_coloring
from .dot import export_dot
from .oracle import min_n_oracle
from .polygon import construct_gon
from .search import ReplicaCertificate, SearchBudget, SearchError, find_mono_binary_replica, required_depth
from .trees import FiniteTree, TreeError, TreeKind, format_vertex

EXIT_NOT_FOUND = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3


class UsageError(Exception):
    pass


def _rule_coloring(name: str, tree: FiniteTree, r: int, seed: int, color: int) -> Coloring:
    if name == "constant":
        return Coloring.constant(tree, r, color)
    if name == "level_mod":
        return Coloring.level_mod(tree, r)
    if name == "first_letter":
        return Coloring.first_letter(tree, r)
    if name == "seeded_hash":
        return Coloring.seeded_hash(tree, r, seed)
    raise UsageError(f"unknown rule {name!r}")


def _load(path: str) -> Coloring:
    try:
        return parse_coloring(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def replica_report(cert: ReplicaCertificate) -> str:
    rm = cert.replica
    lines = [
        f"color {cert.color}",
        "level_seq " + " ".join(map(str, rm.level_seq)),
    ]
    for p in rm.pattern.vertices():
        lines.append(f"map {format_vertex(p)} {format_vertex(rm.map[p])}")
    lines += [f"trace {step}" for step in cert.trace]
    return "\n".join(lines)


def claw_report(cert: ClawCertificate) -> str:
    c = cert.claw
    fmt = lambda vs: " ".join(format_vertex(v) for v in vs)  # noqa: E731
    lines = [
        f"color {cert.color}",
        f"center {format_vertex(c.center)}",
        f"common_distance {c.common_distance}",
        f"X {fmt(c.X)}",
        f"Y {fmt(c.Y)}",
        f"Z {fmt(c.Z)}",
    ]
    lines += [f"trace {step}" for step in cert.trace]
    return "\n".join(lines)


def _render_bound(value, tower: bounds.Tower, show_tower: bool, ascii_only: bool) -> str:
    text = tower.ascii() if ascii_only else tower.arrows()
    if show_tower:
        return text
    if isinstance(value, bounds.Overflow):
        return f"overflow <= {text}"
    return str(value)


def cmd_reduce(args) -> str:
    return words.format_word(words.parse_word(args.word))


def cmd_dist(args) -> str:
    return str(words.distance(words.parse_word(args.w1), words.parse_word(args.w2)))


def cmd_bound(args) -> str:
    if args.which == "edge":
        if args.k is None:
            raise UsageError("bound edge needs -k")
        if args.k < 3:
            raise UsageError("k must be >= 3")
        kind = "edge-even" if args.k % 2 == 0 else "edge-odd"
        tower = bounds.tower_upper_bound(kind, args.r, args.k)
        return tower.ascii() if args.ascii else tower.arrows()
    if args.d is None:
        raise UsageError(f"bound {args.which} needs -d")
    if args.which == "N":
        value, tower = bounds.n_bound(args.r, args.d), bounds.n_tower(args.r, args.d)
    else:
        if args.d < 2:
            raise UsageError("bound M needs d >= 2")
        value, tower = bounds.m_bound(args.r, args.d), bounds.m_tower(args.r, args.d)
    return _render_bound(value, tower, args.tower, args.ascii)


def _source_coloring(args, default_kind: str, need_depth) -> Coloring:
    if args.input and args.rule:
        raise UsageError("give either --input or --rule")
    if args.input:
        col = _load(args.input)
        if col.r > args.r:
            raise UsageError(f"coloring uses {col.r} colors, more than -r {args.r}")
        return col
    if not args.rule:
        raise UsageError("need --input FILE or --rule NAME")
    kind = TreeKind(args.kind or default_kind)
    depth = args.depth if args.depth is not None else need_depth()
    return _rule_coloring(args.rule, FiniteTree(kind, depth), args.r, args.seed, args.color)


def cmd_find(args) -> str:
    budget = SearchBudget(max_vertices_queried=args.max_queries)
    if args.what == "replica":
        col = _source_coloring(args, "binary", lambda: required_depth(args.r, args.d))
        cert = find_mono_binary_replica(col.tree, col, args.r, args.d, budget)
        return json.dumps(cert.to_dict(), indent=2) if args.json else replica_report(cert)
    col = _source_coloring(args, "cayley", lambda: required_claw_depth(args.r, args.d))
    cc = find_mono_claw(col.tree, col, args.r, args.d, budget)
    return json.dumps(cc.to_dict(), indent=2) if args.json else claw_report(cc)


def cmd_gon(args) -> str:
    if args.k < 3:
        raise UsageError("k must be >= 3")
    # the rule is infinite; construct_gon picks the required depth
    tree = FiniteTree(TreeKind.CAYLEY, 1)
    col = _rule_coloring(args.rule, tree, args.r, args.seed, args.color)
    res = construct_gon(col, args.r, args.k, SearchBudget(max_vertices_queried=args.max_queries))
    p = res.polygon
    if args.json:
        data = p.to_dict()
        data["bound"] = res.bound.arrows()
        data["within_bound"] = res.within_bound.value
        return json.dumps(data, indent=2)
    return "\n".join(
        [
            "vertices " + " ".join(words.format_word(v) for v in p.vertices),
            f"edge_length {p.edge_length}",
            f"color {p.color}",
            f"bound {res.bound.arrows()} ({res.within_bound.value})",
        ]
    )


def cmd_oracle(args) -> tuple[str, int]:
    res = min_n_oracle(args.r, args.d, args.max, strict=not args.weak)
    if res.n is None:
        return f"min_n none (n <= {args.max})", EXIT_NOT_FOUND
    out = [f"min_n {res.n}"]
    if res.counterexample is not None:
        text = serialize_coloring(res.counterexample)
        if args.out:
            Path(args.out).write_text(text, encoding="utf-8")
            out.append(f"counterexample n={res.n - 1} written to {args.out}")
        else:
            out.append(f"counterexample n={res.n - 1}")
            out.append(text.rstrip("\n"))
    return "\n".join(out), 0


def cmd_export(args) -> str:
    col = _load(args.input)
    marked: list[str] = []
    if args.highlight:
        data = json.loads(Path(args.highlight).read_text(encoding="utf-8"))
        if "replica" in data:
            marked = ReplicaCertificate.from_dict(data).image_vertices()
        elif "claw" in data:
            cc = ClawCertificate.from_dict(data)
            marked = [cc.claw.center, *cc.claw.vertices()]
        else:
            raise UsageError("highlight file is neither a replica nor a claw certificate")
    return export_dot(col, marked).rstrip("\n")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="treeramsey", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="reduce a word over a, b, c")
    p.add_argument("word")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("dist", help="word-metric distance")
    p.add_argument("w1")
    p.add_argument("w2")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("bound", help="depth bounds and towers")
    p.add_argument("which", choices=["N", "M", "edge"])
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-d", type=int)
    p.add_argument("-k", type=int)
    p.add_argument("--tower", action="store_true", help="print the closed-form tower")
    p.add_argument("--ascii", action="store_true", help="render towers with ^")
    p.set_defaults(func=cmd_bound)

    def coloring_flags(q):
        q.add_argument("--input", help="coloring file")
        q.add_argument("--rule", choices=["constant", "level_mod", "first_letter", "seeded_hash"])
        q.add_argument("--seed", type=int, default=0)
        q.add_argument("--color", type=int, default=0, help="color for the constant rule")
        q.add_argument("--kind", choices=[k.value for k in TreeKind], help="host kind for --rule")
        q.add_argument("--depth", type=int, help="host depth for --rule (default: the bound)")
        q.add_argument("-r", type=int, required=True)
        q.add_argument("--max-queries", type=int, default=20_000_000)
        q.add_argument("--json", action="store_true")

    p = sub.add_parser("find", help="monochromatic replica or claw")
    p.add_argument("what", choices=["replica", "claw"])
    coloring_flags(p)
    p.add_argument("-d", type=int, required=True)
    p.set_defaults(func=cmd_find)

    p = sub.add_parser("gon", help="monochromatic regular k-gon in the Cayley tree")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("--rule", required=True, choices=["constant", "level_mod", "first_letter", "seeded_hash"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--color", type=int, default=0)
    p.add_argument("--max-queries", type=int, default=20_000_000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gon)

    p = sub.add_parser("oracle", help="exhaustive oracles")
    p.add_argument("what", choices=["min-n"])
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--out", help="write the counterexample coloring here")
    p.add_argument("--weak", action="store_true", help="sibling images need only be incomparable")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("export", help="graph export")
    p.add_argument("what", choices=["dot"])
    p.add_argument("--input", required=True)
    p.add_argument("--highlight", help="replica or claw certificate (JSON)")
    p.set_defaults(func=cmd_export)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for flag in ("r", "d"):
        val = getattr(args, flag, None)
        if val is not None and val < 1:
            parser.error(f"-{flag} must be >= 1")
    try:
        result = args.func(args)
    except (UsageError, ColoringError, TreeError, words.WordError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SearchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    code = 0
    if isinstance(result, tuple):
        result, code = result
    print(result)
    return code


if __name__ == "__main__":
    sys.exit(main())
