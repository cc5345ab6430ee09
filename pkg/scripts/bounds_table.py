"""Exact thresholds N(r,d), M(r,d) next to their closed-form towers."""

import argparse
from dataclasses import dataclass

from treeramsey.bounds import Overflow, compare_tower, m_bound, m_tower, n_bound, n_tower


@dataclass
class Config:
    r_values: tuple[int, ...] = (1, 2, 3)
    d_max: int = 6


def digits(v) -> str:
    if isinstance(v, Overflow):
        return "overflow"
    s = str(v)
    return s if len(s) <= 20 else f"~10^{len(s) - 1}"


def run(cfg: Config) -> None:
    print(f"{'r':>2} {'d':>2} {'N(r,d)':>22} {'tower':>12} {'cmp':>8} {'M(r,d)':>22} {'tower':>16}")
    for r in cfg.r_values:
        for d in range(1, cfg.d_max + 1):
            n = n_bound(r, d)
            nt = n_tower(r, d)
            cmp = compare_tower(n, nt).value if not isinstance(n, Overflow) else "-"
            m = m_bound(r, d) if d >= 2 else None
            mt = m_tower(r, d).arrows() if d >= 2 else ""
            print(f"{r:>2} {d:>2} {digits(n):>22} {nt.arrows():>12} {cmp:>8} {digits(m) if m else '':>22} {mt:>16}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--d-max", type=int, default=Config.d_max)
    ap.add_argument("-r", type=int, nargs="+", default=list(Config.r_values))
    args = ap.parse_args()
    run(Config(tuple(args.r), args.d_max))
