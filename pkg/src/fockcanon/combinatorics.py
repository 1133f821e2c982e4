"""Partition combinatorics behind the labelings of semi-infinite monomials.

A partition is a tuple of positive integers in weakly decreasing order.
A charged multipartition is a pair ``(parts, charges)`` of equal-length tuples.

An index ``k`` of the basis vector ``u_k`` decomposes uniquely as
``k = a + n(b-1) - n*l*m`` with ``1 <= a <= n`` and ``1 <= b <= l``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

Partition = tuple[int, ...]


@dataclass(frozen=True, order=True)
class ChargedMultipartition:
    parts: tuple[Partition, ...]
    charges: tuple[int, ...]

    def __post_init__(self):
        if len(self.parts) != len(self.charges):
            raise ValueError("need one charge per component")
        for p in self.parts:
            check_partition(p)

    @property
    def size(self) -> int:
        return sum(sum(p) for p in self.parts)

    @property
    def charge(self) -> int:
        return sum(self.charges)

    def __str__(self) -> str:
        return "(" + ", ".join(partition_str(p) for p in self.parts) + ")"


def check_partition(p: Sequence[int]) -> Partition:
    p = tuple(p)
    if any(x <= 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"not a partition: {p}")
    return p


def partition_str(p: Partition) -> str:
    """Exponential notation, e.g. ``(3,2^2,1)``; empty partition is ``∅``."""
    if not p:
        return "∅"
    out = []
    i = 0
    while i < len(p):
        j = i
        while j < len(p) and p[j] == p[i]:
            j += 1
        out.append(str(p[i]) if j - i == 1 else f"{p[i]}^{j - i}")
        i = j
    return "(" + ",".join(out) + ")"


@lru_cache(maxsize=None)
def partitions(d: int, maxpart: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``d``, in reverse lexicographic order."""
    if maxpart is None:
        maxpart = d
    if d == 0:
        return ((),)
    out = []
    for first in range(min(d, maxpart), 0, -1):
        for rest in partitions(d - first, first):
            out.append((first,) + rest)
    return tuple(out)


def multipartitions(d: int, c: int) -> Iterator[tuple[Partition, ...]]:
    """All ``c``-tuples of partitions of total size ``d``."""
    if c == 1:
        for p in partitions(d):
            yield (p,)
        return
    for k in range(d, -1, -1):
        for p in partitions(k):
            for rest in multipartitions(d - k, c - 1):
                yield (p,) + rest


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """True iff ``mu <= lam`` in dominance order (False for unequal sizes)."""
    if sum(mu) != sum(lam):
        return False
    a = b = 0
    for i in range(max(len(mu), len(lam))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


# --- indices -----------------------------------------------------------------


def decompose_index(k: int, n: int, l: int) -> tuple[int, int, int]:
    """Return ``(a, b, m)`` with ``k = a + n(b-1) - n*l*m``."""
    a = (k - 1) % n + 1
    rest = (k - a) // n  # = (b-1) - l*m
    b = rest % l + 1
    m = -((rest - (b - 1)) // l)
    return a, b, m


def compose_index(a: int, b: int, m: int, n: int, l: int) -> int:
    return a + n * (b - 1) - n * l * m


def beta_sequence(lam: Partition, s: int, r: int) -> tuple[int, ...]:
    """First ``r`` entries ``k_i = lam_i + s - i + 1`` of the semi-infinite sequence."""
    if r < len(lam):
        raise ValueError(f"length {r} shorter than partition {lam}")
    return tuple((lam[i] if i < len(lam) else 0) + s - i for i in range(r))


def partition_from_beta(ks: Sequence[int], s: int) -> Partition:
    """Inverse of :func:`beta_sequence`; ``ks`` must end in the vacuum tail."""
    lam = [k - s + i for i, k in enumerate(ks)]
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)) or (lam and lam[-1] < 0):
        raise ValueError(f"{ks} is not a strictly decreasing charge-{s} sequence")
    return tuple(x for x in lam if x > 0)


def truncation_length(size: int, n: int, l: int) -> int:
    """``size + n*l`` rounded up to a multiple of ``n*l``."""
    p = n * l
    return -(-(size + p) // p) * p


# --- the labelings -------------------------------------------------------------


def _split(lam: Partition, s: int, n: int, l: int, side: str):
    """Shared body of iota_l (``side='l'``) and iota_n (``side='n'``)."""
    c = l if side == "l" else n
    r = truncation_length(len(lam) + sum(lam), n, l) + 2 * n * l
    ks = beta_sequence(lam, s, r)
    comps: list[list[int]] = [[] for _ in range(c)]
    for k in ks:
        a, b, m = decompose_index(k, n, l)
        if side == "l":
            comps[b - 1].append(a - n * m)
        else:
            comps[a - 1].append(b - l * m)
    parts = []
    charges = []
    for seq in comps:
        # the tail of each component is consecutive; read off its charge
        j = len(seq) - 1
        sb = seq[j] + j
        parts.append(partition_from_beta(seq, sb))
        charges.append(sb)
    return ChargedMultipartition(tuple(parts), tuple(charges))


@lru_cache(maxsize=None)
def iota_l(lam: Partition, s: int, n: int, l: int) -> ChargedMultipartition:
    """The ``l``-component labeling of the charged partition ``(lam, s)``."""
    return _split(tuple(lam), s, n, l, "l")


@lru_cache(maxsize=None)
def iota_n(lam: Partition, s: int, n: int, l: int) -> ChargedMultipartition:
    """The ``n``-component labeling of the charged partition ``(lam, s)``."""
    return _split(tuple(lam), s, n, l, "n")


def _join(cmp: ChargedMultipartition, n: int, l: int, side: str) -> tuple[Partition, int]:
    c = l if side == "l" else n
    period = n if side == "l" else l
    if len(cmp.parts) != c:
        raise ValueError(f"expected {c} components, got {len(cmp.parts)}")
    depth = max(len(p) for p in cmp.parts) + max(cmp.charges) - min(cmp.charges) + 2 * n * l
    ks: list[int] = []
    lows = []
    for idx, (p, sb) in enumerate(zip(cmp.parts, cmp.charges)):
        comp_k = []
        for c_val in beta_sequence(p, sb, len(p) + depth):
            # c_val = a - n*m (side l) or b - l*m (side n)
            x = (c_val - 1) % period + 1
            m = (x - c_val) // period
            if side == "l":
                k = compose_index(x, idx + 1, m, n, l)
            else:
                k = compose_index(idx + 1, x, m, n, l)
            comp_k.append(k)
        ks.extend(comp_k)
        lows.append(comp_k[-1])
    cutoff = max(lows)
    top = sorted((k for k in ks if k >= cutoff), reverse=True)
    s = cmp.charge
    # everything below the cutoff is present, so the sequence continues top[-1]-1, ...
    if top[-1] != s - len(top) + 1:
        raise ValueError(f"inconsistent charges {cmp.charges} for {cmp}")
    return partition_from_beta(top, s), s


@lru_cache(maxsize=None)
def iota_l_inv(cmp: ChargedMultipartition, n: int, l: int) -> tuple[Partition, int]:
    return _join(cmp, n, l, "l")


@lru_cache(maxsize=None)
def iota_n_inv(cmp: ChargedMultipartition, n: int, l: int) -> tuple[Partition, int]:
    return _join(cmp, n, l, "n")


def vacuum(charges: Sequence[int]) -> ChargedMultipartition:
    return ChargedMultipartition(tuple(() for _ in charges), tuple(charges))


# --- the sign of the phi basis ---------------------------------------------------


def _b_sequence(lam: Partition, s: int, n: int, l: int, r: int, side: str) -> list[int]:
    idx = 1 if side == "l" else 0
    return [decompose_index(k, n, l)[idx] for k in beta_sequence(lam, s, r)]


def _inversion_count(bs: Sequence[int]) -> int:
    # sum over j of #{i < j : b_i < b_j}
    return sum(1 for j in range(len(bs)) for i in range(j) if bs[i] < bs[j])


def phi_exponent(lam: Partition, s: int, n: int, l: int, r: int | None = None,
                 side: str = "l") -> int:
    """The exponent Phi comparing ``|lam, s>`` against the vacuum of its component.

    ``side='l'`` uses the ``b`` labels of the l-labeling (the one that
    defines the phi basis); ``side='n'`` is the mirror statistic using ``a``.
    """
    cmp = iota_l(lam, s, n, l) if side == "l" else iota_n(lam, s, n, l)
    inv = iota_l_inv if side == "l" else iota_n_inv
    lam0, _ = inv(vacuum(cmp.charges), n, l)
    if r is None:
        r = truncation_length(max(sum(lam) + len(lam), sum(lam0) + len(lam0)), n, l)
    if r < max(len(lam), len(lam0)):
        raise ValueError("truncation shorter than the partitions")
    return (_inversion_count(_b_sequence(lam, s, n, l, r, side))
            - _inversion_count(_b_sequence(lam0, s, n, l, r, side)))


@lru_cache(maxsize=None)
def phi_sign(lam: Partition, s: int, n: int, l: int, side: str = "l") -> int:
    return -1 if phi_exponent(lam, s, n, l, side=side) % 2 else 1


# --- nodes -------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Node:
    """An addable or removable node, ordered by ``(content, component)``."""
    content: int
    component: int  # 1-based
    row: int
    col: int

    def colour(self, n: int) -> int:
        return self.content % n


def addable_nodes(cmp: ChargedMultipartition, n: int, colour: int | None = None) -> list[Node]:
    out = []
    for b, (p, sb) in enumerate(zip(cmp.parts, cmp.charges), start=1):
        for i in range(len(p) + 1):
            j = (p[i] if i < len(p) else 0) + 1
            if i == 0 or p[i - 1] >= j:
                node = Node(sb + j - (i + 1), b, i + 1, j)
                if colour is None or node.content % n == colour:
                    out.append(node)
    return sorted(out)


def removable_nodes(cmp: ChargedMultipartition, n: int, colour: int | None = None) -> list[Node]:
    out = []
    for b, (p, sb) in enumerate(zip(cmp.parts, cmp.charges), start=1):
        for i in range(len(p)):
            j = p[i]
            if i + 1 == len(p) or p[i + 1] < j:
                node = Node(sb + j - (i + 1), b, i + 1, j)
                if colour is None or node.content % n == colour:
                    out.append(node)
    return sorted(out)


def add_node(cmp: ChargedMultipartition, node: Node) -> ChargedMultipartition:
    parts = list(cmp.parts)
    p = list(parts[node.component - 1])
    if node.row - 1 == len(p):
        p.append(1)
    else:
        p[node.row - 1] += 1
    parts[node.component - 1] = check_partition(p)
    return ChargedMultipartition(tuple(parts), cmp.charges)


def remove_node(cmp: ChargedMultipartition, node: Node) -> ChargedMultipartition:
    parts = list(cmp.parts)
    p = list(parts[node.component - 1])
    p[node.row - 1] -= 1
    parts[node.component - 1] = check_partition([x for x in p if x > 0])
    return ChargedMultipartition(tuple(parts), cmp.charges)


def node_statistics(cmp: ChargedMultipartition, node: Node, n: int) -> tuple[int, int, int]:
    """``(N^<, N^>, N)`` for the colour of ``node`` relative to ``cmp``.

    ``node`` is an addable node of ``cmp`` or a removable one; it is
    excluded from both one-sided counts.
    """
    r = node.content % n
    add = addable_nodes(cmp, n, r)
    rem = removable_nodes(cmp, n, r)
    key = (node.content, node.component)
    below = sum(1 for x in add if (x.content, x.component) < key) - \
        sum(1 for x in rem if (x.content, x.component) < key)
    above = sum(1 for x in add if (x.content, x.component) > key) - \
        sum(1 for x in rem if (x.content, x.component) > key)
    return below, above, len(add) - len(rem)


# --- cylindricity ----------------------------------------------------------------


def is_cylindrical(cmp: ChargedMultipartition, n: int) -> bool:
    """Membership in the set indexing the global lower crystal basis.

    Requires ``n > s_1 >= ... >= s_l >= 0``.
    """
    s = cmp.charges
    l = len(s)
    if not (n > s[0] and all(s[i] >= s[i + 1] for i in range(l - 1)) and s[-1] >= 0):
        raise ValueError(f"charges {s} outside n > s_1 >= ... >= s_l >= 0")

    def part(b: int, i: int) -> int:  # b, i are 1-based
        p = cmp.parts[b - 1]
        return p[i - 1] if i - 1 < len(p) else 0

    longest = max((len(p) for p in cmp.parts), default=0)
    for i in range(1, longest + n + 2):
        for b in range(1, l):
            if part(b + 1, i) < part(b, i + s[b - 1] - s[b]):
                return False
        if part(1, i) < part(l, i + n + s[-1] - s[0]):
            return False

    ends: dict[int, set[int]] = {}
    for p, sb in zip(cmp.parts, s):
        for i, length in enumerate(p, start=1):
            ends.setdefault(length, set()).add((sb + length - i) % n)
    return all(len(cols) < n for cols in ends.values())
