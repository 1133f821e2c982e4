"""Golden D^+ tables shipped as JSON, and an entrywise diff against the recursion."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from . import combinatorics as cb
from .canonical import canonical_block
from .combinatorics import ChargedMultipartition, Partition
from .laurent import ZERO, LaurentPoly


@dataclass
class FixtureBlock:
    size: int                 # |lam|
    multisize: int            # |lam_l|
    labels: list[Partition]
    multilabels: list[ChargedMultipartition]
    entries: dict[tuple[Partition, Partition], LaurentPoly]


@dataclass
class Fixture:
    n: int
    l: int
    s: int
    charges: tuple[int, ...]
    sign: str
    blocks: list[FixtureBlock]


@dataclass
class BlockReport:
    size: int
    multisize: int
    labels_ok: bool
    mismatches: list[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.labels_ok and not self.mismatches


def default_path() -> Path:
    return Path(str(resources.files("fockcanon") / "data" / "golden_d_plus.json"))


def load(path: str | Path | None = None) -> Fixture:
    raw = json.loads(Path(path or default_path()).read_text())
    charges = tuple(raw["charges"])
    blocks = []
    for b in raw["blocks"]:
        labels = [tuple(x["lambda"]) for x in b["labels"]]
        multis = [ChargedMultipartition(tuple(tuple(p) for p in x["multipartition"]), charges)
                  for x in b["labels"]]
        entries = {}
        for col in b["columns"]:
            lam = tuple(col["lambda"])
            for e in col["entries"]:
                entries[(lam, tuple(e["mu"]))] = LaurentPoly.from_json(e["coeff"])
        blocks.append(FixtureBlock(b["size"], b["multisize"], labels, multis, entries))
    return Fixture(raw["n"], raw["l"], raw["s"], charges, raw["sign"], blocks)


def verify(fx: Fixture | None = None) -> list[BlockReport]:
    fx = fx or load()
    out = []
    for b in fx.blocks:
        # the printed multipartition label decides |lam|; the printed lam must agree
        derived = [cb.iota_l_inv(m, fx.n, fx.l) for m in b.multilabels]
        labels_ok = all(lam == d and s == fx.s for lam, (d, s) in zip(b.labels, derived))
        labels_ok &= all(sum(lam) == b.size for lam in b.labels)
        D = canonical_block(fx.n, fx.l, fx.s, b.size, fx.sign, fx.charges).restrict(b.labels)
        rep = BlockReport(b.size, b.multisize, labels_ok)
        for lam in b.labels:
            for mu in b.labels:
                want = b.entries.get((lam, mu), ZERO)
                got = D[(lam, mu)]
                if want != got:
                    rep.mismatches.append((lam, mu, want, got))
        out.append(rep)
    return out
