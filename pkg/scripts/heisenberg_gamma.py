"""Measure the scalar [B_m, B_-m] on small basis vectors and check that it does not depend on the vector."""

import argparse
from dataclasses import dataclass

from fockcanon import combinatorics as cb
from fockcanon.fock import FockVector, heisenberg_B


@dataclass
class Config:
    pairs: tuple = ((2, 2), (2, 3), (3, 2))
    m: int = 1
    max_degree: int = 2
    charges: tuple = (0, 1)


def commutator_scalar(m, v):
    c = heisenberg_B(m, heisenberg_B(-m, v)) - heisenberg_B(-m, heisenberg_B(m, v))
    (lam,) = v.terms
    if set(c.terms) - {lam}:
        return None
    return c.terms.get(lam) and c.terms[lam] * v.terms[lam]


def main(cfg: Config) -> int:
    status = 0
    for n, l in cfg.pairs:
        seen = set()
        for s in cfg.charges:
            for d in range(cfg.max_degree + 1):
                for lam in cb.partitions(d):
                    seen.add(commutator_scalar(cfg.m, FockVector.phi(lam, s, n, l)))
        if len(seen) == 1 and None not in seen:
            g = seen.pop()
            print(f"(n,l)=({n},{l}) gamma_{cfg.m} = {g.pretty()}   value at q=1: {int(g(1))}")
        else:
            status = 1
            print(f"(n,l)=({n},{l}) not a scalar: {seen}")
    return status


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m", type=int, default=Config.m)
    ap.add_argument("--max-degree", type=int, default=Config.max_degree)
    a = ap.parse_args()
    raise SystemExit(main(Config(m=a.m, max_degree=a.max_degree)))
