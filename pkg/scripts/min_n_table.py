"""Exact minimal host depth versus the recurrence bound, for small (r, d)."""

import argparse
import time
from dataclasses import dataclass

from treeramsey.bounds import n_bound
from treeramsey.colorings import serialize_coloring
from treeramsey.oracle import min_n_oracle
from treeramsey.search import BudgetExhausted


@dataclass
class Config:
    cases: tuple[tuple[int, int], ...] = ((1, 3), (2, 1), (2, 2), (3, 1))
    n_max: int = 4
    show_counterexample: bool = False


def run(cfg: Config) -> None:
    print(f"{'r':>2} {'d':>2} {'strict':>6} {'weak':>5} {'N(r,d)':>7} {'secs':>6}")
    for r, d in cfg.cases:
        t0 = time.perf_counter()
        cells = []
        for strict in (True, False):
            try:
                res = min_n_oracle(r, d, cfg.n_max, strict=strict)
                cells.append(str(res.n) if res.n is not None else f">{cfg.n_max}")
            except BudgetExhausted:
                cells.append("cap")
        print(f"{r:>2} {d:>2} {cells[0]:>6} {cells[1]:>5} {n_bound(r, d)!s:>7} {time.perf_counter() - t0:>6.1f}")
        if cfg.show_counterexample:
            res = min_n_oracle(r, d, cfg.n_max)
            if res.counterexample is not None:
                print(serialize_coloring(res.counterexample))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=Config.n_max)
    ap.add_argument("--show-counterexample", action="store_true")
    args = ap.parse_args()
    run(Config(n_max=args.n_max, show_counterexample=args.show_counterexample))
