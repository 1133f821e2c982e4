"""Print the D+ tables for n = l = 2 at charges (0,0) and diff them against the shipped transcription."""

import argparse
from dataclasses import dataclass

from fockcanon import fixtures
from fockcanon.cli import JobSpec, run


@dataclass
class Config:
    max_size: int = 4
    fmt: str = "tsv"


def main(cfg: Config) -> int:
    for size in range(1, cfg.max_size + 1):
        _, text = run(JobSpec("dmat", 2, 2, (0, 0), size, "plus", cfg.fmt))
        print(f"== |lambda_l| = {size}")
        print(text)
    bad = 0
    for rep in fixtures.verify():
        bad += not rep.ok
        print(f"{'PASS' if rep.ok else 'FAIL'} |lambda_l|={rep.multisize} |lambda|={rep.size}")
    return 1 if bad else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-size", type=int, default=Config.max_size)
    ap.add_argument("--format", dest="fmt", choices=("tsv", "latex", "json"), default=Config.fmt)
    raise SystemExit(main(Config(**vars(ap.parse_args()))))
