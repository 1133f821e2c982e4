"""Compare D from the bar-involution recursion with D from parabolic KL polynomials.

Sweeps every charge vector of n = l = 2 at total charge s. Cost grows fast:
|lambda| = 6 takes seconds, 7 takes minutes.
"""

import argparse
import time
from dataclasses import dataclass

from fockcanon import combinatorics as cb
from fockcanon.hecke import klcheck


@dataclass
class Config:
    n: int = 2
    l: int = 2
    s: int = 0
    max_degree: int = 6
    signs: tuple = ("plus", "minus")


def main(cfg: Config) -> int:
    total_bad = 0
    for sign in cfg.signs:
        for d in range(cfg.max_degree + 1):
            for ch in sorted({cb.iota_l(lam, cfg.s, cfg.n, cfg.l).charges for lam in cb.partitions(d)}):
                t = time.perf_counter()
                rows = klcheck(cfg.n, cfg.l, cfg.s, d, sign, ch)
                bad = sum(r[2] != r[3] for r in rows)
                nontrivial = sum(1 for r in rows if r[2] and r[0] != r[1])
                total_bad += bad
                print(f"{sign:5} |lambda|={d} charges={ch}: {len(rows)} entries, "
                      f"{nontrivial} off-diagonal nonzero, {bad} disagree [{time.perf_counter() - t:.2f}s]")
    return 1 if total_bad else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=Config.n)
    ap.add_argument("--l", type=int, default=Config.l)
    ap.add_argument("--s", type=int, default=Config.s)
    ap.add_argument("--max-degree", type=int, default=Config.max_degree)
    a = ap.parse_args()
    raise SystemExit(main(Config(a.n, a.l, a.s, a.max_degree)))
