"""The extended affine Weyl group of type A and its Hecke algebra with KL bases.

Group elements are affine permutations ``w`` of the integers with
``w(j + r) = w(j) + r``, stored by their window ``(w(1), ..., w(r))``.
Products are compositions (``xy = x o y``), and the right action on
``Z^r`` is ``(h . x)_j = H(x(j))`` where ``H(j + r c) = h_j + n c``.
With this, ``s_i`` swaps ``i`` and ``i + 1``, ``eps_i`` sends ``i`` to
``i + r``, ``pi`` is the shift ``j -> j + 1`` and ``s_0`` swaps ``r`` and
``r + 1``.

This module is a verification oracle; nothing in :mod:`canonical` calls it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from . import combinatorics as cb
from .combinatorics import Partition
from .laurent import ONE, ZERO, LaurentPoly, qpow

Window = tuple[int, ...]


class LengthBoundExceeded(RuntimeError):
    pass


# --- the group ----------------------------------------------------------------------------


def _split(j: int, r: int) -> tuple[int, int]:
    """``j = p + r c`` with ``p`` in ``1..r``."""
    c, p = divmod(j - 1, r)
    return p + 1, c


def evaluate(w: Window, j: int) -> int:
    p, c = _split(j, len(w))
    return w[p - 1] + len(w) * c


def identity(r: int) -> Window:
    return tuple(range(1, r + 1))


def compose(x: Window, y: Window) -> Window:
    return tuple(evaluate(x, j) for j in y)


def inverse(w: Window) -> Window:
    r = len(w)
    out = [0] * r
    for j, v in enumerate(w, start=1):
        p, c = _split(v, r)
        out[p - 1] = j - r * c
    return tuple(out)


def is_affine_permutation(w: Sequence[int]) -> bool:
    r = len(w)
    return sorted((v - 1) % r for v in w) == list(range(r))


def s(i: int, r: int) -> Window:
    """Simple reflection ``s_i``, ``0 <= i < r``."""
    w = list(range(1, r + 1))
    if i == 0:
        w[0], w[r - 1] = 0, r + 1
    else:
        w[i - 1], w[i] = i + 1, i
    return tuple(w)


def eps(i: int, r: int) -> Window:
    w = list(range(1, r + 1))
    w[i - 1] += r
    return tuple(w)


def pi(r: int, power: int = 1) -> Window:
    return tuple(j + power for j in range(1, r + 1))


def length(w: Window) -> int:
    r = len(w)
    return sum(abs((w[j] - w[i]) // r) for i in range(r) for j in range(i + 1, r))


def right_descent(w: Window, i: int) -> bool:
    """``l(w s_i) < l(w)``."""
    r = len(w)
    return evaluate(w, i) > evaluate(w, i + 1) if i else evaluate(w, r) > evaluate(w, r + 1)


def left_descent(w: Window, i: int) -> bool:
    return right_descent(inverse(w), i)


def right_action(h: Sequence[int], w: Window, n: int) -> tuple[int, ...]:
    r = len(h)
    out = []
    for v in w:
        p, c = _split(v, r)
        out.append(h[p - 1] + n * c)
    return tuple(out)


def act(h: Sequence[int], gen: str, n: int) -> tuple[int, ...]:
    """Right action of a named generator: ``s1``, ``s0``, ``e2``, ``pi``, ``pi-1``."""
    r = len(h)
    if gen == "pi":
        w = pi(r)
    elif gen in ("pi-1", "pi^-1"):
        w = pi(r, -1)
    elif gen[0] == "s":
        w = s(int(gen[1:]), r)
    elif gen[0] in "eε":
        w = eps(int(gen[1:]), r)
    else:
        raise ValueError(f"unknown generator {gen!r}")
    return right_action(h, w, n)


def reduced_word(w: Window) -> tuple[list[int], int]:
    """``w = s_{i_1} ... s_{i_k} pi^p``; returns ``([i_1, ..., i_k], p)``."""
    word = []
    r = len(w)
    while length(w) > 0:
        i = next(i for i in range(r) if left_descent(w, i))
        word.append(i)
        w = compose(s(i, r), w)
    return word, w[0] - 1


def parabolic_subgroup(seq: Sequence[int]) -> list[Window]:
    """The finite stabilizer of ``seq``: generated by ``s_i`` with ``seq_i == seq_{i+1}``."""
    r = len(seq)
    gens = [s(i, r) for i in range(1, r) if seq[i - 1] == seq[i]]
    seen = {identity(r)}
    frontier = [identity(r)]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                v = compose(w, g)
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return sorted(seen, key=lambda w: (length(w), w))


def longest(group: Iterable[Window]) -> Window:
    return max(group, key=length)


# --- the indexing data a(k), b(k), x(k) -------------------------------------------------------


@dataclass(frozen=True)
class CosetData:
    a: tuple[int, ...]
    b: tuple[int, ...]
    h: tuple[int, ...]
    x: Window


def minimal_rep_and_x(ks: Sequence[int], n: int, l: int) -> CosetData:
    """``a(k)``, ``b(k)``, ``h`` and the minimal representative ``x(k)`` with ``a . x = h``."""
    r = len(ks)
    dec = [cb.decompose_index(k, n, l) for k in ks]
    a = tuple(sorted(d[0] for d in dec))
    b = tuple(sorted((d[1] for d in dec), reverse=True))
    h: list[int] = []
    for comp in range(l, 0, -1):
        h.extend(sorted((d[0] - n * d[2] for d in dec if d[1] == comp), reverse=True))
    # each h_j = alpha + n c with alpha in 1..n must come from a slot p with a_p = alpha;
    # among equal a-values, slots go to positions in increasing x^{-1} order (minimality)
    want = []
    for j, v in enumerate(h, start=1):
        c, rem = divmod(v - 1, n)
        want.append((rem + 1, j - r * c, j, c))
    slots: dict[int, list[int]] = {}
    for p, av in enumerate(a, start=1):
        slots.setdefault(av, []).append(p)
    x = [0] * r
    for alpha in slots:
        entries = sorted(e for e in want if e[0] == alpha)
        if len(entries) != len(slots[alpha]):
            raise AssertionError("h is not in the orbit of a(k)")
        for p, (_, _, j, c) in zip(slots[alpha], entries):
            x[j - 1] = p + r * c
    xw = tuple(x)
    assert right_action(a, xw, n) == tuple(h)
    return CosetData(a, b, tuple(h), xw)


# --- the Hecke algebra ------------------------------------------------------------------------


@dataclass
class HeckeElement:
    terms: dict[Window, LaurentPoly] = field(default_factory=dict)

    @classmethod
    def T(cls, w: Window, c: LaurentPoly = ONE) -> "HeckeElement":
        return cls({w: c}) if c else cls()

    def _add(self, w: Window, c: LaurentPoly) -> None:
        if not c:
            return
        v = self.terms.get(w, ZERO) + c
        if v:
            self.terms[w] = v
        else:
            self.terms.pop(w, None)

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        out = HeckeElement(dict(self.terms))
        for w, c in other.terms.items():
            out._add(w, c)
        return out

    def __neg__(self) -> "HeckeElement":
        return HeckeElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def scale(self, c: LaurentPoly | int) -> "HeckeElement":
        if isinstance(c, int):
            c = LaurentPoly.const(c)
        return HeckeElement({w: v * c for w, v in self.terms.items() if v * c})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, HeckeElement) and self.terms == other.terms

    def coeff(self, w: Window) -> LaurentPoly:
        return self.terms.get(w, ZERO)

    def left_mul_s(self, i: int) -> "HeckeElement":
        """``T_{s_i} * self``."""
        out = HeckeElement()
        diff = LaurentPoly({-1: 1, 1: -1})
        for y, c in self.terms.items():
            sy = compose(s(i, len(y)), y)
            out._add(sy, c)
            if left_descent(y, i):
                out._add(y, c * diff)
        return out

    def left_mul_pi(self, power: int) -> "HeckeElement":
        p = pi(len(next(iter(self.terms))) if self.terms else 1, power)
        return HeckeElement({compose(p, y): c for y, c in self.terms.items()})

    def left_mul_T(self, w: Window) -> "HeckeElement":
        word, p = reduced_word(w)
        out = self.left_mul_pi(p) if p else self
        for i in reversed(word):
            out = out.left_mul_s(i)
        return out

    def __mul__(self, other: "HeckeElement") -> "HeckeElement":
        out = HeckeElement()
        for w, c in self.terms.items():
            out = out + other.left_mul_T(w).scale(c)
        return out

    def bar(self) -> "HeckeElement":
        """``sum c_w T_w -> sum bar(c_w) T_{w^-1}^{-1}``."""
        out = HeckeElement()
        for w, c in self.terms.items():
            out = out + T_inverse_of_inverse(w).scale(c.bar())
        return out


def T_inverse_of_inverse(w: Window) -> HeckeElement:
    """``(T_{w^-1})^{-1} = T'_{s_{i_1}} ... T'_{s_{i_k}} T_{pi^p}`` with ``T'_s = T_s + (q - q^-1)``."""
    word, p = reduced_word(w)
    r = len(w)
    out = HeckeElement.T(pi(r, p))
    diff = LaurentPoly({1: 1, -1: -1})
    for i in reversed(word):
        out = out.left_mul_s(i) + out.scale(diff)
    return out


class KLBasis:
    """Memoised ``C'_w`` (``variant='Cprime'``) or ``C_w`` (``variant='C'``).

    ``C'_w = T_w mod q Z[q]`` and ``C_w = T_w mod q^-1 Z[q^-1]``; both are
    built from a left descent ``w = s v`` as ``C_s C_v`` minus bar-invariant
    corrections that clear the forbidden part of every lower coefficient.
    """

    def __init__(self, variant: str = "Cprime", max_length: int = 80):
        if variant not in ("C", "Cprime"):
            raise ValueError(variant)
        self.variant = variant
        self.max_length = max_length
        self._memo: dict[Window, HeckeElement] = {}

    def _forbidden(self, c: LaurentPoly) -> LaurentPoly:
        """The bar-invariant correction that removes the non-allowed part of ``c``."""
        out = ZERO
        for e, v in c.items():
            if self.variant == "Cprime" and e <= 0 or self.variant == "C" and e >= 0:
                out = out + LaurentPoly.monomial(e, v)
                if e:
                    out = out + LaurentPoly.monomial(-e, v)
        return out

    def __call__(self, w: Window) -> HeckeElement:
        hit = self._memo.get(w)
        if hit is not None:
            return hit
        lw = length(w)
        if lw > self.max_length:
            raise LengthBoundExceeded(f"l({w}) = {lw} > {self.max_length}")
        r = len(w)
        if lw == 0:
            res = HeckeElement.T(w)
        else:
            i = next(i for i in range(r) if left_descent(w, i))
            v = compose(s(i, r), w)
            cv = self(v)
            shift = qpow(1) if self.variant == "Cprime" else -qpow(-1)
            res = cv.left_mul_s(i) + cv.scale(shift)
            for z in sorted(res.terms, key=lambda z: (-length(z), z)):
                if z == w or z not in res.terms:
                    continue
                corr = self._forbidden(res.terms[z])
                if corr:
                    res = res - self(z).scale(corr)
        self._memo[w] = res
        return res

    def poly(self, y: Window, x: Window) -> LaurentPoly:
        """``P^+_{y,x}`` (``Cprime``) or ``P^-_{y,x}`` (``C``)."""
        return self(x).coeff(y)


@lru_cache(maxsize=None)
def kl_basis(variant: str = "Cprime", max_length: int = 80) -> KLBasis:
    return KLBasis(variant, max_length)


# --- D through parabolic KL polynomials -------------------------------------------------


def d_via_kl(ks: Sequence[int], ls: Sequence[int], n: int, l: int, sign: str,
             max_length: int = 80) -> LaurentPoly:
    """``D^{sign}_{k, l}`` from parabolic KL polynomials; ``ks``, ``ls`` are length-``r`` prefixes."""
    dk = minimal_rep_and_x(ks, n, l)
    dl = minimal_rep_and_x(ls, n, l)
    if dk.a != dl.a or dk.b != dl.b:
        return ZERO
    if sign in ("minus", "-"):
        basis = kl_basis("C", max_length)
        total = ZERO
        for sg in parabolic_subgroup(dk.a):
            total = total + qpow(-length(sg)) * basis.poly(compose(sg, dl.x), dk.x)
        return total
    basis = kl_basis("Cprime", max_length)
    wa = longest(parabolic_subgroup(dk.a))
    wbg = parabolic_subgroup(dk.b)
    wb = longest(wbg)
    top = compose(compose(wa, dk.x), wb)
    low = compose(compose(wa, dl.x), wb)
    total = ZERO
    for sg in wbg:
        ls_ = length(sg)
        coeff = qpow(ls_) * (-1 if ls_ % 2 else 1)
        total = total + coeff * basis.poly(compose(low, sg), top)
    return total


def d_via_kl_partitions(lam: Partition, mu: Partition, s: int, n: int, l: int, sign: str,
                        max_length: int = 80) -> LaurentPoly:
    r = sum(lam)
    if sum(mu) != r:
        return ZERO
    return d_via_kl(cb.beta_sequence(lam, s, r), cb.beta_sequence(mu, s, r), n, l, sign, max_length)


def klcheck(n: int, l: int, s: int, d: int, sign: str = "plus",
            charges: Sequence[int] | None = None, max_length: int = 80) -> list[tuple]:
    """Entrywise comparison with :func:`canonical.canonical_block`.

    Returns ``(lam, mu, via_recursion, via_kl)`` for every pair of labels.
    """
    from .canonical import canonical_block

    D = canonical_block(n, l, s, d, sign, charges)
    out = []
    for lam, mu in product(D.labels, D.labels):
        out.append((lam, mu, D[(lam, mu)], d_via_kl_partitions(lam, mu, s, n, l, sign, max_length)))
    return out
