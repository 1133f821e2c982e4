"""Semi-infinite q-wedges of fixed charge and the operators acting on them.

A :class:`FockVector` stores coefficients over the monomial basis
``|lam, s>``; the signed basis ``phi(lam, s) = (-1)^Phi |lam, s>`` is reached
through :meth:`FockVector.phi_coefficients` and :meth:`FockVector.from_phi`.

Two independent routes compute the quantum group action:

* :func:`chevalley_action` - node combinatorics on multipartitions;
* :func:`wedge_action_oracle` - coproduct expansion over a finite prefix of
  the wedge followed by straightening.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from . import combinatorics as cb
from .combinatorics import ChargedMultipartition, Partition
from .laurent import ONE, ZERO, LaurentPoly, qpow
from .wedge import add_term, straightener


class ComponentMismatch(ValueError):
    pass


class TruncationError(RuntimeError):
    pass


@dataclass
class FockVector:
    n: int
    l: int
    s: int
    terms: dict[Partition, LaurentPoly] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {tuple(k): v for k, v in self.terms.items() if v}

    # constructors

    @classmethod
    def basis(cls, lam: Partition, s: int, n: int, l: int) -> "FockVector":
        """The monomial ``|lam, s>``."""
        return cls(n, l, s, {tuple(lam): ONE})

    @classmethod
    def phi(cls, lam: Partition, s: int, n: int, l: int) -> "FockVector":
        """The signed basis vector ``phi(lam, s)``."""
        return cls(n, l, s, {tuple(lam): LaurentPoly.const(cb.phi_sign(tuple(lam), s, n, l))})

    @classmethod
    def phi_multi(cls, cmp: ChargedMultipartition, n: int, l: int, side: str = "l") -> "FockVector":
        inv = cb.iota_l_inv if side == "l" else cb.iota_n_inv
        lam, s = inv(cmp, n, l)
        return cls.phi(lam, s, n, l)

    @classmethod
    def from_phi(cls, coeffs: Mapping[Partition, LaurentPoly], s: int, n: int, l: int) -> "FockVector":
        return cls(n, l, s, {tuple(lam): c * cb.phi_sign(tuple(lam), s, n, l)
                             for lam, c in coeffs.items()})

    # views

    def phi_coefficients(self) -> dict[Partition, LaurentPoly]:
        return {lam: c * cb.phi_sign(lam, self.s, self.n, self.l) for lam, c in self.terms.items()}

    def multipartition_coefficients(self, side: str = "l") -> dict[ChargedMultipartition, LaurentPoly]:
        """phi-basis coefficients keyed by the ``l``- or ``n``-labeling."""
        iota = cb.iota_l if side == "l" else cb.iota_n
        return {iota(lam, self.s, self.n, self.l): c for lam, c in self.phi_coefficients().items()}

    def components(self, side: str = "l") -> set[tuple[int, ...]]:
        iota = cb.iota_l if side == "l" else cb.iota_n
        return {iota(lam, self.s, self.n, self.l).charges for lam in self.terms}

    # linear structure

    def _check(self, other: "FockVector") -> None:
        if (self.n, self.l, self.s) != (other.n, other.l, other.s):
            raise ComponentMismatch("vectors live in different wedge spaces")

    def __add__(self, other: "FockVector") -> "FockVector":
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            add_term(out, k, v)
        return FockVector(self.n, self.l, self.s, out)

    def __neg__(self) -> "FockVector":
        return FockVector(self.n, self.l, self.s, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + (-other)

    def scale(self, c) -> "FockVector":
        return FockVector(self.n, self.l, self.s, {k: v * c for k, v in self.terms.items()})

    __rmul__ = scale

    def __eq__(self, other) -> bool:
        if not isinstance(other, FockVector):
            return NotImplemented
        return (self.n, self.l, self.s) == (other.n, other.l, other.s) and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def zero_like(self) -> "FockVector":
        return FockVector(self.n, self.l, self.s, {})

    def to_json(self) -> dict:
        return {
            "n": self.n, "l": self.l, "s": self.s,
            "terms": [{"lambda": list(lam), "coeff": c.to_json()}
                      for lam, c in sorted(self.phi_coefficients().items(), reverse=True)],
            "basis": "phi",
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "FockVector":
        n, l, s = int(obj["n"]), int(obj["l"]), int(obj["s"])
        coeffs: dict[Partition, LaurentPoly] = {}
        for t in obj["terms"]:
            if "lambda" in t:
                lam = cb.check_partition(t["lambda"])
            else:
                iota_inv = cb.iota_l_inv if t.get("side", "l") == "l" else cb.iota_n_inv
                cmp = ChargedMultipartition(tuple(cb.check_partition(p) for p in t["parts"]),
                                            tuple(t["charges"]))
                lam, s2 = iota_inv(cmp, n, l)
                if s2 != s:
                    raise ComponentMismatch(f"term {t} has charge {s2}, vector has {s}")
            coeffs[lam] = coeffs.get(lam, ZERO) + LaurentPoly.from_json(t["coeff"])
        if obj.get("basis", "phi") == "phi":
            return cls.from_phi(coeffs, s, n, l)
        return cls(n, l, s, coeffs)

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*|{cb.partition_str(lam)}>" for lam, c in sorted(self.terms.items(), reverse=True))
        return f"FockVector(n={self.n}, l={self.l}, s={self.s}: {body or '0'})"


def degree(lam: Partition) -> int:
    return sum(lam)


# --- combinatorial action -------------------------------------------------------------

GENERATORS = ("f", "e", "t")


def _parse_gen(gen) -> tuple[str, int]:
    if isinstance(gen, str):
        name, _, idx = gen.partition(":")
        return name, int(idx)
    return gen


def chevalley_action(gen, side: str, v: FockVector) -> FockVector:
    """Action of a Chevalley generator ``gen`` (``"f:0"`` or ``("e", 1)``) through node combinatorics.

    ``side='n'``: U_q(sl_n) in the phi basis, on ``l``-labeled multipartitions.
    ``f_r`` adds an ``r``-node with weight ``q^{N^>}``; ``e_r`` removes one with
    weight ``q^{-N^<}``. ``t_r`` scales by ``q^N``.

    ``side='l'``: U_q(sl_l) on ``n``-labeled multipartitions. Here the node
    rule holds in the basis signed by the ``n``-labeling's own Phi statistic,
    with ``q -> q^-1`` in the weights of ``f`` and ``e`` (``t`` is unchanged).
    """
    name, r = _parse_gen(gen)
    n, l, s = v.n, v.l, v.s
    if side == "n":
        iota, iota_inv, period, step = cb.iota_l, cb.iota_l_inv, n, 1
    elif side == "l":
        iota, iota_inv, period, step = cb.iota_n, cb.iota_n_inv, l, -1
    else:
        raise ValueError(f"side must be 'n' or 'l', not {side!r}")
    if not 0 <= r < period:
        raise ValueError(f"generator index {r} out of range for sl_{period}")

    def sign(lam):
        return cb.phi_sign(lam, s, n, l, side="l" if side == "n" else "n")

    out: dict[Partition, LaurentPoly] = {}
    for lam, c in v.terms.items():
        c = c * sign(lam)
        cmp = iota(lam, s, n, l)
        if name == "t":
            add_term(out, lam, c.shift(_n_total(cmp, r, period)))
        elif name == "f":
            for node in cb.addable_nodes(cmp, period, r):
                _, above, _ = cb.node_statistics(cmp, node, period)
                mu, _ = iota_inv(cb.add_node(cmp, node), n, l)
                add_term(out, mu, c.shift(step * above))
        elif name == "e":
            for node in cb.removable_nodes(cmp, period, r):
                smaller = cb.remove_node(cmp, node)
                below, _, _ = cb.node_statistics(smaller, node, period)
                mu, _ = iota_inv(smaller, n, l)
                add_term(out, mu, c.shift(-step * below))
        else:
            raise ValueError(f"unknown generator {name!r}")
    return FockVector(n, l, s, {mu: c * sign(mu) for mu, c in out.items()})


def _n_total(cmp: ChargedMultipartition, r: int, period: int) -> int:
    return len(cb.addable_nodes(cmp, period, r)) - len(cb.removable_nodes(cmp, period, r))


# --- coproduct oracle ------------------------------------------------------------------


def _prefix_length(lam: Partition, s: int, n: int, l: int, extra: int) -> int:
    """Smallest R >= |lam| + len(lam) + extra whose tail starts at a multiple of n*l."""
    nl = n * l
    R = max(len(lam), sum(lam)) + extra
    while (s - R) % nl:
        R += 1
    return R


def _t_exp(k: int, i: int, n: int, l: int, side: str) -> int:
    a, b, _ = cb.decompose_index(k, n, l)
    x, p = (a, n) if side == "n" else (b, l)
    return int(x % p == i % p) - int(x % p == (i + 1) % p)


def _f_index(k: int, i: int, n: int, l: int, side: str) -> int | None:
    a, b, m = cb.decompose_index(k, n, l)
    if side == "n":
        if a % n != i:
            return None
        return cb.compose_index(a + 1, b, m, n, l) if a < n else cb.compose_index(1, b, m - 1, n, l)
    if b % l != i:
        return None
    return cb.compose_index(a, b + 1, m, n, l) if b < l else cb.compose_index(a, 1, m - 1, n, l)


def _e_index(k: int, i: int, n: int, l: int, side: str) -> int | None:
    a, b, m = cb.decompose_index(k, n, l)
    if side == "n":
        if a % n != (i + 1) % n:
            return None
        return cb.compose_index(a - 1, b, m, n, l) if a > 1 else cb.compose_index(n, b, m + 1, n, l)
    if b % l != (i + 1) % l:
        return None
    return cb.compose_index(a, b - 1, m, n, l) if b > 1 else cb.compose_index(a, l, m + 1, n, l)


def _apply_on_prefix(name: str, i: int, side: str, ks: tuple[int, ...], n: int, l: int,
                     active: int) -> dict:
    """Coproduct expansion of one generator on the finite wedge ``ks``.

    Only the first ``active`` factors are acted on. Returns an unstraightened
    ``{monomial: coeff}``; the tail eigenvalue is applied by the caller.
    """
    t = [_t_exp(k, i, n, l, side) for k in ks]
    # sign of the Cartan factor in the coproduct: N side uses t, L side t^-1
    sg = 1 if side == "n" else -1
    out: dict = {}
    if name == "t":
        out[ks] = qpow(sum(t))
        return out
    for j, k in enumerate(ks[:active]):
        if name == "f":
            k2 = _f_index(k, i, n, l, side)
            if k2 is None:
                continue
            add_term(out, ks[:j] + (k2,) + ks[j + 1:], qpow(sg * sum(t[:j])))
        else:
            k2 = _e_index(k, i, n, l, side)
            if k2 is None:
                continue
            add_term(out, ks[:j] + (k2,) + ks[j + 1:], qpow(-sg * sum(t[j + 1:])))
    return out


def _tail_exp(i: int, n: int, l: int, side: str) -> int:
    # t_i on |nlm): level l on the n side, level n on the l side
    if i != 0:
        return 0
    return l if side == "n" else n


def _oracle_once(name: str, i: int, side: str, v: FockVector, extra: int) -> FockVector:
    n, l, s = v.n, v.l, v.s
    nl = n * l
    st = straightener(n, l)
    out: dict[Partition, LaurentPoly] = {}
    sg = 1 if side == "n" else -1
    tail = _tail_exp(i, n, l, side)
    if name == "t":
        tail_factor = qpow(tail)
    elif name == "e":
        tail_factor = qpow(-sg * tail)
    else:
        tail_factor = ONE
    for lam, c in v.terms.items():
        R = _prefix_length(lam, s, n, l, extra)
        # act on the first R factors; one more period of the tail rides along so
        # that lowered indices are straightened against it
        ks = cb.beta_sequence(lam, s, R + nl)
        raw = _apply_on_prefix(name, i, side, ks, n, l, R)
        for mono, c2 in st.normal_form_vector(raw).items():
            add_term(out, cb.partition_from_beta(mono, s), c * c2 * tail_factor)
    return FockVector(n, l, s, out)


def wedge_action_oracle(gen, side: str, v: FockVector, extra: int | None = None,
                        check: bool = True) -> FockVector:
    """Apply a generator by expanding the iterated coproduct over a finite prefix.

    The prefix has at least ``|lam| + extra`` factors (default ``extra = n*l``)
    and always ends where the tail is ``|n*l*m)``. With ``check`` the result is
    recomputed with one more period and must agree.
    """
    name, i = _parse_gen(gen)
    period = v.n if side == "n" else v.l
    if side not in ("n", "l"):
        raise ValueError(f"side must be 'n' or 'l', not {side!r}")
    if not 0 <= i < period:
        raise ValueError(f"generator index {i} out of range")
    nl = v.n * v.l
    if extra is None:
        extra = nl
    res = _oracle_once(name, i, side, v, extra)
    if check:
        res2 = _oracle_once(name, i, side, v, extra + nl)
        if res2 != res:
            raise TruncationError(f"{name}_{i} on side {side} unstable under truncation growth")
    return res


# --- Heisenberg operators --------------------------------------------------------------


def _heisenberg_once(m: int, v: FockVector, extra: int) -> FockVector:
    n, l, s = v.n, v.l, v.s
    nl = n * l
    st = straightener(n, l)
    out: dict[Partition, LaurentPoly] = {}
    for lam, c in v.terms.items():
        R = _prefix_length(lam, s, n, l, extra + nl * abs(m))
        ks = cb.beta_sequence(lam, s, R + nl * (abs(m) + 1))
        raw: dict = {}
        for j in range(R):
            add_term(raw, ks[:j] + (ks[j] - nl * m,) + ks[j + 1:], ONE)
        for mono, c2 in st.normal_form_vector(raw).items():
            add_term(out, cb.partition_from_beta(mono, s), c * c2)
    return FockVector(n, l, s, out)


def heisenberg_B(m: int, v: FockVector, extra: int | None = None, check: bool = True) -> FockVector:
    """``B_m``: shift one factor at a time by ``-n*l*m`` and straighten."""
    if m == 0:
        raise ValueError("B_0 is not defined")
    nl = v.n * v.l
    if extra is None:
        extra = nl
    res = _heisenberg_once(m, v, extra)
    if check and res != _heisenberg_once(m, v, extra + nl):
        raise TruncationError(f"B_{m} unstable under truncation growth")
    return res


# --- weights ---------------------------------------------------------------------------


def weight(cmp: ChargedMultipartition, level: int) -> tuple[int, ...]:
    """Coefficients of ``Lambda_0, ..., Lambda_{c-1}`` for a ``c``-component label.

    ``(level + s_c - s_1) Lambda_0 + sum_i (s_i - s_{i+1}) Lambda_i``.
    """
    s = cmp.charges
    c = len(s)
    return (level + s[-1] - s[0],) + tuple(s[i - 1] - s[i] for i in range(1, c))
