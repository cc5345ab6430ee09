"""Monochromatic regular k-gons for seeded colorings, with edge lengths against the tower bound."""

import argparse
from collections import Counter
from dataclasses import dataclass

from treeramsey import words
from treeramsey.colorings import Coloring
from treeramsey.polygon import construct_gon, validate_polygon
from treeramsey.search import trace_kind
from treeramsey.trees import FiniteTree, TreeKind


@dataclass
class Config:
    r: int = 2
    ks: tuple[int, ...] = (3, 4, 5, 6, 8)
    seeds: int = 20
    show: int = 1


def run(cfg: Config) -> None:
    tree = FiniteTree(TreeKind.CAYLEY, 1)
    for k in cfg.ks:
        edges = []
        paths = Counter()
        for seed in range(cfg.seeds):
            col = Coloring.seeded_hash(tree, cfg.r, seed)
            res = construct_gon(col, cfg.r, k)
            assert validate_polygon(res.polygon, col)
            edges.append(res.polygon.edge_length)
            paths.update({trace_kind(res.source.trace[-1])})
            if seed < cfg.show:
                vs = " ".join(words.format_word(v) for v in res.polygon.vertices)
                print(f"k={k} seed={seed}: {vs}  (edge {res.polygon.edge_length}, bound {res.bound.arrows()})")
        print(f"k={k}: edge min/max {min(edges)}/{max(edges)} over {cfg.seeds} seeds; last steps {dict(paths)}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-r", type=int, default=Config.r)
    ap.add_argument("-k", type=int, nargs="+", default=list(Config.ks))
    ap.add_argument("--seeds", type=int, default=Config.seeds)
    args = ap.parse_args()
    run(Config(args.r, tuple(args.k), args.seeds))
