"""Canonical bases G^+ / G^- and their transition matrices to the phi basis.

Within one block (fixed size and component) the bar matrix ``A`` is
unitriangular, so the bar-invariance condition ``D = bar(D) A`` can be
solved entry by entry: for fixed ``lam`` and each ``mu`` below it,

    D[lam, mu] - bar(D[lam, mu]) = sum_{nu strictly between} bar(D[lam, nu]) A[nu, mu]

and the left side determines ``D[lam, mu]`` once its support is confined to
positive (G^+) or negative (G^-) powers of q.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import combinatorics as cb
from .combinatorics import ChargedMultipartition, Partition
from .fock import FockVector, chevalley_action
from .involution import BarMatrix, bar_matrix_block, block_partitions
from .laurent import ONE, ZERO, LaurentPoly, gauss_split


class AntisymmetryError(AssertionError):
    pass


@dataclass
class TransitionMatrix:
    """``D[lam, mu]``: coefficient of ``phi(mu)`` in ``G(lam)``."""
    sign: str
    n: int
    l: int
    s: int
    d: int
    charges: tuple[int, ...] | None
    labels: list[Partition]
    entries: dict[tuple[Partition, Partition], LaurentPoly] = field(default_factory=dict)

    def __getitem__(self, key: tuple[Partition, Partition]) -> LaurentPoly:
        return self.entries.get(key, ZERO)

    def multilabel(self, lam: Partition, side: str = "l") -> ChargedMultipartition:
        iota = cb.iota_l if side == "l" else cb.iota_n
        return iota(lam, self.s, self.n, self.l)

    def row(self, lam: Partition) -> dict[Partition, LaurentPoly]:
        return {mu: c for (a, mu), c in self.entries.items() if a == lam}

    def restrict(self, labels: Sequence[Partition]) -> "TransitionMatrix":
        """Sub-block on ``labels``; entries coupling it to the rest must vanish."""
        keep = set(labels)
        for (a, b), c in self.entries.items():
            if c and (a in keep) != (b in keep):
                raise AssertionError(f"block does not split: D[{a}, {b}] = {c}")
        ordered = [lam for lam in self.labels if lam in keep]
        sub = {(a, b): c for (a, b), c in self.entries.items() if a in keep and b in keep}
        return TransitionMatrix(self.sign, self.n, self.l, self.s, self.d, self.charges, ordered, sub)

    def g_vector(self, lam: Partition) -> FockVector:
        return FockVector.from_phi(self.row(lam), self.s, self.n, self.l)

    def map(self, fn: Callable[[LaurentPoly], LaurentPoly]) -> dict:
        return {k: fn(v) for k, v in self.entries.items()}

    def to_json(self) -> dict:
        side = "l"
        return {
            "sign": self.sign, "n": self.n, "l": self.l, "s": self.s, "size": self.d,
            "charges": None if self.charges is None else list(self.charges),
            "labels": [{"lambda": list(lam),
                        "multipartition": [list(p) for p in self.multilabel(lam, side).parts],
                        "charges": list(self.multilabel(lam, side).charges)}
                       for lam in self.labels],
            # column lam, row mu, as in a printed decomposition matrix
            "columns": [{"lambda": list(lam),
                         "entries": [{"mu": list(mu), "coeff": self[(lam, mu)].to_json()}
                                     for mu in self.labels if self[(lam, mu)]]}
                        for lam in self.labels],
        }


def _solve(A: BarMatrix, sign: str, order: Sequence[Partition]) -> dict:
    entries: dict[tuple[Partition, Partition], LaurentPoly] = {}
    pos = {lam: i for i, lam in enumerate(order)}
    for lam in order:
        row: dict[Partition, LaurentPoly] = {lam: ONE}
        for mu in order[pos[lam] + 1:]:
            r = ZERO
            for nu, c in row.items():
                a = A[(nu, mu)]
                if a:
                    r = r + c.bar() * a
            if r.bar() != -r:
                raise AntisymmetryError(f"defect {r} at ({lam}, {mu}) is not anti-invariant")
            g = gauss_split(r, sign)
            if g:
                row[mu] = g
        for mu, c in row.items():
            entries[(lam, mu)] = c
    return entries


def canonical_block(n: int, l: int, s: int, d: int, sign: str = "plus",
                    charges: Sequence[int] | None = None, side: str = "l",
                    order: Sequence[Partition] | None = None) -> TransitionMatrix:
    """Transition matrix of ``G^+`` (``sign='plus'``) or ``G^-`` on one block.

    ``order`` may be any linear extension of dominance on the block; the
    default is reverse lexicographic order.
    """
    sign = {"+": "plus", "-": "minus"}.get(sign, sign)
    A = bar_matrix_block(n, l, s, d, charges, side)
    if order is None:
        order = A.labels
    elif sorted(order) != sorted(A.labels):
        raise ValueError("order must be a permutation of the block labels")
    entries = _solve(A, sign, list(order))
    return TransitionMatrix(sign, n, l, s, d, A.charges, A.labels, entries)


def g_vector(lam: Partition, s: int, n: int, l: int, sign: str = "plus") -> FockVector:
    cmp = cb.iota_l(lam, s, n, l)
    block = canonical_block(n, l, s, sum(lam), sign, cmp.charges)
    return block.g_vector(lam)


def g_vector_multi(cmp: ChargedMultipartition, n: int, l: int, sign: str = "plus") -> FockVector:
    lam, s = cb.iota_l_inv(cmp, n, l)
    return g_vector(lam, s, n, l, sign)


def multipartition_blocks(n: int, l: int, charges: Sequence[int], size: int,
                          side: str = "l") -> list[tuple[int, list[Partition]]]:
    """Labels of all multipartitions of ``size`` with the given charges, grouped by ``|lam|``.

    Each group is in reverse lexicographic order of ``lam``; groups are sorted by ``|lam|``.
    """
    inv = cb.iota_l_inv if side == "l" else cb.iota_n_inv
    groups: dict[int, list[Partition]] = {}
    for parts in cb.multipartitions(size, len(charges)):
        lam, _ = inv(ChargedMultipartition(parts, tuple(charges)), n, l)
        groups.setdefault(sum(lam), []).append(lam)
    return [(d, sorted(g, reverse=True)) for d, g in sorted(groups.items())]


def canonical_blocks_by_size(n: int, l: int, charges: Sequence[int], size: int,
                             sign: str = "plus", side: str = "l") -> list[TransitionMatrix]:
    """``D^{sign}`` restricted to multipartitions of ``size`` with charge vector ``charges``."""
    s = sum(charges)
    out = []
    for d, labels in multipartition_blocks(n, l, charges, size, side):
        out.append(canonical_block(n, l, s, d, sign, charges, side).restrict(labels))
    return out


# --- duality ----------------------------------------------------------------------------


def dual_labels(lam: Partition, s: int, n: int, l: int) -> Partition:
    """The partition indexing the same ``l``-multipartition in the ``(l, n)`` wedge.

    In the swapped wedge the ``l``-component labeling is the ``n``-side one.
    """
    cmp = cb.iota_l(lam, s, n, l)
    mu, s2 = cb.iota_n_inv(cmp, l, n)
    assert s2 == s
    return mu


def duality_check(n: int, l: int, s: int, d: int,
                  charges: Sequence[int] | None = None) -> list[tuple]:
    """Compare ``D^{+-}`` of ``(n, l)`` with ``D^{-+}`` of ``(l, n)`` at ``q -> -q^-1``.

    Returns the list of mismatches ``(sign, lam, mu, lhs, rhs)``; empty means
    the identity holds on the block.
    """
    bad = []
    for sgn, other in (("plus", "minus"), ("minus", "plus")):
        D = canonical_block(n, l, s, d, sgn, charges)
        cache: dict = {}
        for lam in D.labels:
            lam2 = dual_labels(lam, s, n, l)
            key = (sum(lam2), cb.iota_l(lam2, s, l, n).charges)
            if key not in cache:
                cache[key] = canonical_block(l, n, s, key[0], other, key[1])
            D2 = cache[key]
            for mu in D.labels:
                mu2 = dual_labels(mu, s, n, l)
                lhs = D[(lam, mu)]
                rhs = D2[(lam2, mu2)].sub_minus_qinv() if sum(mu2) == key[0] else ZERO
                if lhs != rhs:
                    bad.append((sgn, lam, mu, lhs, rhs))
    return bad


# --- crystal compatibility ------------------------------------------------------------------


def crystal_subset(n: int, charges: Sequence[int], max_size: int) -> list[ChargedMultipartition]:
    """Cylindrical multipartitions of size ``<= max_size`` with the given charges."""
    out = []
    for d in range(max_size + 1):
        for parts in cb.multipartitions(d, len(charges)):
            cmp = ChargedMultipartition(parts, tuple(charges))
            if cb.is_cylindrical(cmp, n):
                out.append(cmp)
    return out


def expand_in_canonical(v: FockVector, sign: str = "plus") -> dict[Partition, LaurentPoly]:
    """Coefficients of ``v`` over ``G^{sign}`` (``v`` must lie in whole blocks)."""
    n, l, s = v.n, v.l, v.s
    phi = v.phi_coefficients()
    groups: dict[tuple, dict] = {}
    for lam, c in phi.items():
        key = (sum(lam), cb.iota_l(lam, s, n, l).charges)
        groups.setdefault(key, {})[lam] = c
    out: dict[Partition, LaurentPoly] = {}
    for (d, ch), coeffs in groups.items():
        D = canonical_block(n, l, s, d, sign, ch)
        rest = dict(coeffs)
        # D is unitriangular in reverse-lex order; peel off the top label each time
        for lam in D.labels:
            c = rest.get(lam, ZERO)
            if not c:
                continue
            out[lam] = c
            for mu, dmu in D.row(lam).items():
                x = rest.get(mu, ZERO) - c * dmu
                if x:
                    rest[mu] = x
                else:
                    rest.pop(mu, None)
        if rest:
            raise AssertionError(f"residual {rest} after expansion")
    return out


def crystal_check(n: int, l: int, charges: Sequence[int], max_size: int) -> list[tuple]:
    """For cylindrical ``lam_l`` of size ``<= max_size`` and every ``f_i``, list
    the non-cylindrical labels occurring in ``f_i G^+(lam_l)``."""
    bad = []
    for cmp in crystal_subset(n, charges, max_size):
        g = g_vector_multi(cmp, n, l, "plus")
        for i in range(n):
            fg = chevalley_action(("f", i), "n", g)
            for mu in expand_in_canonical(fg, "plus"):
                mcmp = cb.iota_l(mu, g.s, n, l)
                if not cb.is_cylindrical(mcmp, n):
                    bad.append((cmp, i, mcmp))
    return bad
