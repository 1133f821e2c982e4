"""Straightening of finite q-wedge monomials into ordered (strictly decreasing) form.

A monomial ``u_{k_1} ^ ... ^ u_{k_r}`` is a tuple of ints; a wedge vector is a
dict mapping ordered tuples to :class:`LaurentPoly` coefficients.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterable, Mapping, Tuple

from .combinatorics import decompose_index
from .laurent import ONE, ZERO, LaurentPoly, qpow, riv_coefficient

Monomial = Tuple[int, ...]
WedgeVector = Dict[Monomial, LaurentPoly]

DEFAULT_FUEL = 10 ** 7


class StraighteningError(RuntimeError):
    """The rewrite budget ran out; ordered monomials are a basis, so this is a bug."""


def add_term(vec: WedgeVector, key, coeff: LaurentPoly) -> None:
    if not coeff:
        return
    c = vec.get(key)
    c = coeff if c is None else c + coeff
    if c:
        vec[key] = c
    else:
        vec.pop(key, None)


@lru_cache(maxsize=None)
def _q_minus_qinv_times_odd(m: int) -> LaurentPoly:
    return LaurentPoly({1: 1, -1: -1}) * riv_coefficient("odd", m)


@lru_cache(maxsize=None)
def _q_minus_qinv_times_even(m: int) -> LaurentPoly:
    return LaurentPoly({1: 1, -1: -1}) * riv_coefficient("even", m)


@lru_cache(maxsize=None)
def straighten_pair(k1: int, k2: int, n: int, l: int) -> tuple[tuple[tuple[int, int], LaurentPoly], ...]:
    """Express ``u_k1 ^ u_k2`` (``k1 <= k2``) through ordered pairs.

    Returns a tuple of ``((p, r), coeff)`` with ``p > r``.
    """
    if k1 > k2:
        raise ValueError(f"pair ({k1}, {k2}) is already ordered")
    if k1 == k2:
        return ()
    nl = n * l
    a1, b1, _ = decompose_index(k1, n, l)
    a2, b2, _ = decompose_index(k2, n, l)
    alpha = (a2 - a1) % nl
    beta = (n * (b2 - b1)) % nl
    out: WedgeVector = {}

    def series(shift: int, start: int, coeff_of) -> None:
        m = start
        while True:
            p, r = k2 - shift - nl * m, k1 + shift + nl * m
            if p <= r:
                break
            add_term(out, (p, r), coeff_of(m))
            m += 1

    if alpha == 0 and beta == 0:
        add_term(out, (k2, k1), -ONE)
    elif beta == 0:
        add_term(out, (k2, k1), -qpow(-1))
        f = LaurentPoly({-2: 1, 0: -1})
        series(alpha, 0, lambda m: f * qpow(-2 * m))
        series(0, 1, lambda m: -f * qpow(-2 * m + 1))
    elif alpha == 0:
        add_term(out, (k2, k1), -qpow(1))
        f = LaurentPoly({2: 1, 0: -1})
        series(beta, 0, lambda m: f * qpow(2 * m))
        series(0, 1, lambda m: -f * qpow(2 * m - 1))
    else:
        add_term(out, (k2, k1), -ONE)
        series(beta, 0, _q_minus_qinv_times_odd)
        series(alpha, 0, lambda m: -_q_minus_qinv_times_odd(m))
        series(alpha + beta - nl, 1, _q_minus_qinv_times_even)
        series(0, 1, lambda m: -_q_minus_qinv_times_even(m))
    return tuple(out.items())


class Straightener:
    """Memoised normal forms for a fixed ``(n, l)``.

    The table only ever grows and every entry is a pure function of its key,
    so results do not depend on the order in which queries arrive.
    """

    def __init__(self, n: int, l: int, fuel: int = DEFAULT_FUEL):
        if n < 2 or l < 2:
            raise ValueError("n and l must both be at least 2")
        self.n, self.l = n, l
        self.fuel = fuel
        self._insert_memo: dict[tuple[int, Monomial], tuple] = {}
        self._spent = 0

    def _burn(self) -> None:
        self._spent += 1
        if self._spent > self.fuel:
            raise StraighteningError(f"more than {self.fuel} rewrites in one normal form")

    def insert(self, x: int, tail: Monomial) -> tuple[tuple[Monomial, LaurentPoly], ...]:
        """Normal form of ``u_x ^ tail`` where ``tail`` is ordered."""
        if not tail or x > tail[0]:
            return (((x,) + tail, ONE),)
        key = (x, tail)
        hit = self._insert_memo.get(key)
        if hit is not None:
            return hit
        self._burn()
        out: WedgeVector = {}
        for (p, r), c in straighten_pair(x, tail[0], self.n, self.l):
            for w, c2 in self.insert(r, tail[1:]):
                for w2, c3 in self.insert(p, w):
                    add_term(out, w2, c * c2 * c3)
        res = tuple(out.items())
        self._insert_memo[key] = res
        return res

    def normal_form(self, mono: Iterable[int]) -> WedgeVector:
        """Expand a (possibly disordered) monomial in the ordered basis."""
        mono = tuple(mono)
        self._spent = 0
        return self._nf(mono)

    def _nf(self, mono: Monomial) -> WedgeVector:
        if all(mono[i] > mono[i + 1] for i in range(len(mono) - 1)):
            return {mono: ONE}
        # straighten the tail first, then push the head through
        cur: WedgeVector = {(): ONE}
        for x in reversed(mono):
            nxt: WedgeVector = {}
            for w, c in cur.items():
                for w2, c2 in self.insert(x, w):
                    add_term(nxt, w2, c * c2)
            cur = nxt
            if not cur:
                break
        return cur

    def normal_form_vector(self, vec: Mapping[Monomial, LaurentPoly]) -> WedgeVector:
        out: WedgeVector = {}
        self._spent = 0
        for mono, c in vec.items():
            for w, c2 in self._nf(tuple(mono)).items():
                add_term(out, w, c * c2)
        return out


_STRAIGHTENERS: dict[tuple[int, int], Straightener] = {}


def straightener(n: int, l: int) -> Straightener:
    st = _STRAIGHTENERS.get((n, l))
    if st is None:
        st = _STRAIGHTENERS[(n, l)] = Straightener(n, l)
    return st


def normal_form(mono: Iterable[int], n: int, l: int) -> WedgeVector:
    return straightener(n, l).normal_form(mono)


def vector_to_json(vec: Mapping[Monomial, LaurentPoly]) -> list:
    return [{"indices": list(m), "coeff": c.to_json()}
            for m, c in sorted(vec.items(), reverse=True)]
