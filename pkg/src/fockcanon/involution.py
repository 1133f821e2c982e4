"""The bar involution on semi-infinite q-wedges and its matrices in the phi basis."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from . import combinatorics as cb
from .combinatorics import Partition
from .fock import FockVector
from .laurent import ONE, LaurentPoly, qpow
from .wedge import add_term, straightener


def c_statistic(ks: Sequence[int], r: int, n: int, l: int) -> int:
    """``sum_{i<j<=r} [b_i == b_j] - [a_i == a_j]`` over the first ``r`` indices."""
    ab = [cb.decompose_index(k, n, l)[:2] for k in ks[:r]]
    total = 0
    for j in range(len(ab)):
        for i in range(j):
            total += (ab[i][1] == ab[j][1]) - (ab[i][0] == ab[j][0])
    return total


@lru_cache(maxsize=None)
def bar_monomial(lam: Partition, s: int, n: int, l: int, r: int | None = None) -> tuple:
    """``bar |lam, s>`` as ``((mu, coeff), ...)`` in the monomial basis.

    ``r`` defaults to ``|lam|``, the shortest reversal that is allowed.
    """
    d = sum(lam)
    if r is None:
        r = d
    if r < d:
        raise ValueError(f"reversal length {r} below the degree {d}")
    if r <= 1:
        return ((lam, ONE),)
    ks = cb.beta_sequence(lam, s, r)
    sign = -1 if (r * (r - 1) // 2) % 2 else 1
    factor = qpow(c_statistic(ks, r, n, l)) * sign
    nf = straightener(n, l).normal_form(ks[::-1])
    out = []
    for mono, c in nf.items():
        # confinement keeps every index above the tail, which starts at s - r
        out.append((cb.partition_from_beta(mono, s), c * factor))
    return tuple(sorted(out, reverse=True))


def bar_fock(v: FockVector, r_extra: int = 0) -> FockVector:
    """Semi-linear bar involution (coefficients get ``q -> q^-1``).

    ``r_extra`` lengthens every reversal beyond ``|lam|``; the answer must
    not change.
    """
    out: dict[Partition, LaurentPoly] = {}
    for lam, c in v.terms.items():
        cb_ = c.bar()
        r = sum(lam) + r_extra if (sum(lam) or r_extra) else None
        for mu, c2 in bar_monomial(lam, v.s, v.n, v.l, r):
            add_term(out, mu, cb_ * c2)
    return FockVector(v.n, v.l, v.s, out)


# optional persistent store of rows, filled and saved by :mod:`fockcanon.cache`
ROW_STORE: dict[tuple, dict[Partition, LaurentPoly]] | None = None


def bar_phi(lam: Partition, s: int, n: int, l: int) -> dict[Partition, LaurentPoly]:
    """Row ``A_{lam, .}``: the phi-coefficients of ``bar phi(lam, s)``."""
    key = (n, l, s, tuple(lam))
    if ROW_STORE is not None and key in ROW_STORE:
        return dict(ROW_STORE[key])
    sl = cb.phi_sign(lam, s, n, l)
    row = {mu: c * (sl * cb.phi_sign(mu, s, n, l)) for mu, c in bar_monomial(lam, s, n, l)}
    if ROW_STORE is not None:
        ROW_STORE[key] = dict(row)
    return row


# --- blocks ---------------------------------------------------------------------------


def block_partitions(n: int, l: int, s: int, d: int, charges: Sequence[int] | None = None,
                     side: str = "l") -> list[Partition]:
    """Partitions of ``d`` whose ``side``-labeling has the given charge vector,
    in reverse lexicographic order (a linear extension of dominance)."""
    iota = cb.iota_l if side == "l" else cb.iota_n
    out = []
    for lam in cb.partitions(d):
        if charges is None or iota(lam, s, n, l).charges == tuple(charges):
            out.append(lam)
    return out


@dataclass
class BarMatrix:
    n: int
    l: int
    s: int
    d: int
    charges: tuple[int, ...] | None
    labels: list[Partition]
    entries: dict[tuple[Partition, Partition], LaurentPoly]

    def __getitem__(self, key: tuple[Partition, Partition]) -> LaurentPoly:
        return self.entries.get(key, LaurentPoly())

    def as_rows(self) -> list[list[LaurentPoly]]:
        return [[self[(a, b)] for b in self.labels] for a in self.labels]


def bar_matrix_block(n: int, l: int, s: int, d: int, charges: Sequence[int] | None = None,
                     side: str = "l") -> BarMatrix:
    labels = block_partitions(n, l, s, d, charges, side)
    members = set(labels)
    entries = {}
    for lam in labels:
        for mu, c in bar_phi(lam, s, n, l).items():
            if mu not in members:
                raise AssertionError(f"bar phi{lam} leaves the block: term {mu}")
            entries[(lam, mu)] = c
    return BarMatrix(n, l, s, d, None if charges is None else tuple(charges), labels, entries)
