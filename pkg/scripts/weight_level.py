"""Which level makes t_r act by q^<weight, alpha_r>?

For each labeling the Lambda_0 coefficient is tried as (c + s_last - s_first)
for c in {n, l}; the script counts agreements with the t_r eigenvalues.
"""

import argparse
from dataclasses import dataclass

from fockcanon import combinatorics as cb
from fockcanon.fock import FockVector, chevalley_action, weight


@dataclass
class Config:
    pairs: tuple = ((2, 3), (3, 2))
    max_degree: int = 4
    charges: tuple = (-1, 0, 1)


def main(cfg: Config) -> None:
    for n, l in cfg.pairs:
        for side, iota, period in (("l", cb.iota_l, l), ("n", cb.iota_n, n)):
            hits = {n: 0, l: 0}
            total = 0
            for s in cfg.charges:
                for d in range(cfg.max_degree + 1):
                    for lam in cb.partitions(d):
                        v = FockVector.phi(lam, s, n, l)
                        cmp = iota(lam, s, n, l)
                        for r in range(period):
                            (e,) = chevalley_action(("t", r), side, v).terms[lam].exponents()
                            total += 1
                            for level in hits:
                                hits[level] += weight(cmp, level)[r] == e
            print(f"(n,l)=({n},{l}) U_q(sl_{period}) on {side}-labels: "
                  + ", ".join(f"level {lv}: {h}/{total}" for lv, h in hits.items()))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=Config.max_degree)
    main(Config(max_degree=ap.parse_args().max_degree))
