"""Exact Laurent polynomials in one variable ``q`` with integer coefficients."""

from __future__ import annotations

from typing import Iterable, Mapping, Union

Scalar = Union[int, "LaurentPoly"]


class NonExactDivision(ArithmeticError):
    pass


class LaurentPoly:
    """Element of Z[q, q^-1], stored as ``{exponent: coefficient}``.

    Zero coefficients are never stored, so two polynomials are equal iff
    their maps are equal. Instances are treated as immutable.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for e, v in items:
            v = c.get(e, 0) + int(v)
            if v:
                c[int(e)] = v
            else:
                c.pop(e, None)
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: dict[int, int]) -> "LaurentPoly":
        # caller guarantees no zero values
        p = object.__new__(cls)
        p._c = c
        p._hash = None
        return p

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "LaurentPoly":
        return cls._raw({e: c}) if c else ZERO

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls.monomial(0, c)

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def items(self):
        return self._c.items()

    def coeff(self, e: int) -> int:
        return self._c.get(e, 0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def exponents(self) -> list[int]:
        return sorted(self._c)

    def min_exp(self) -> int:
        return min(self._c)

    def max_exp(self) -> int:
        return max(self._c)

    # ring operations

    def __add__(self, other: Scalar) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._c:
            return self
        if not self._c:
            return other
        c = dict(self._c)
        for e, v in other._c.items():
            w = c.get(e, 0) + v
            if w:
                c[e] = w
            else:
                del c[e]
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other: Scalar) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return LaurentPoly._raw({e: v * other for e, v in self._c.items()})
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if len(other._c) == 1:
            (f, w), = other._c.items()
            return LaurentPoly._raw({e + f: v * w for e, v in self._c.items()})
        c: dict[int, int] = {}
        for e, v in self._c.items():
            for f, w in other._c.items():
                c[e + f] = c.get(e + f, 0) + v * w
        return LaurentPoly._raw({e: v for e, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if len(self._c) != 1 or abs(next(iter(self._c.values()))) != 1:
                raise NonExactDivision("only monomial units can be inverted")
            (e, v), = self._c.items()
            return LaurentPoly.monomial(-e * (-k), v ** (-k))
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``q**k``."""
        if k == 0:
            return self
        return LaurentPoly._raw({e + k: v for e, v in self._c.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({self._c!r})"

    def __str__(self) -> str:
        return self.pretty()

    def pretty(self, var: str = "q") -> str:
        if not self._c:
            return "0"
        out = []
        for e in sorted(self._c, reverse=True):
            v = self._c[e]
            sign = "-" if v < 0 else "+"
            a = abs(v)
            if e == 0:
                body = str(a)
            else:
                mono = var if e == 1 else f"{var}^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            out.append((sign, body))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    def latex(self) -> str:
        if not self._c:
            return r"\cdot"
        parts = []
        for e in sorted(self._c):
            v = self._c[e]
            a = abs(v)
            if e == 0:
                body = str(a)
            else:
                mono = "q" if e == 1 else f"q^{{{e}}}"
                body = mono if a == 1 else f"{a}\\,{mono}"
            parts.append(("-" if v < 0 else "+", body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    # evaluation and substitutions

    def __call__(self, x):
        return sum(v * x ** e for e, v in self._c.items()) if self._c else 0 * x

    def bar(self) -> "LaurentPoly":
        """The ring involution q -> q^-1."""
        return LaurentPoly._raw({-e: v for e, v in self._c.items()})

    def sub_minus_qinv(self) -> "LaurentPoly":
        """The substitution q -> -q^-1."""
        return LaurentPoly._raw({-e: (-v if e % 2 else v) for e, v in self._c.items()})

    def at_zero(self) -> int:
        if any(e < 0 for e in self._c):
            raise ValueError(f"{self} has negative powers; cannot evaluate at q=0")
        return self._c.get(0, 0)

    def positive_part(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: v for e, v in self._c.items() if e > 0})

    def negative_part(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: v for e, v in self._c.items() if e < 0})

    def divmod_exact(self, d: "LaurentPoly") -> "LaurentPoly":
        """Exact division by ``d``; raises NonExactDivision otherwise."""
        if not d._c:
            raise ZeroDivisionError("division by zero polynomial")
        if not self._c:
            return ZERO
        dlo, dhi = min(d._c), max(d._c)
        lead = d._c[dhi]
        rem = dict(self._c)
        quot: dict[int, int] = {}
        while rem:
            top = max(rem)
            if top - dhi < min(rem) - dlo:
                raise NonExactDivision(f"{self} is not divisible by {d}")
            v = rem[top]
            if v % lead:
                raise NonExactDivision(f"{self} is not divisible by {d}")
            c = v // lead
            e = top - dhi
            quot[e] = c
            for f, w in d._c.items():
                x = rem.get(e + f, 0) - c * w
                if x:
                    rem[e + f] = x
                else:
                    rem.pop(e + f, None)
        return LaurentPoly._raw(quot)

    # serialisation

    def to_json(self) -> dict[str, int]:
        return {str(e): self._c[e] for e in sorted(self._c)}

    @classmethod
    def from_json(cls, obj: Mapping[str, int]) -> "LaurentPoly":
        return cls((int(e), int(v)) for e, v in obj.items())


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    return NotImplemented


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
q = LaurentPoly._raw({1: 1})
QINV = LaurentPoly._raw({-1: 1})


def qpow(e: int) -> LaurentPoly:
    return LaurentPoly._raw({e: 1})


def bar(p: LaurentPoly) -> LaurentPoly:
    return p.bar()


def riv_coefficient(kind: str, m: int) -> LaurentPoly:
    """Quotients ``(q^(2m+1) + q^-(2m+1)) / (q + q^-1)`` (kind ``"odd"``) and
    ``(q^2m - q^-2m) / (q + q^-1)`` (kind ``"even"``).
    """
    if kind == "odd":
        if m < 0:
            raise ValueError("m must be >= 0 for the odd quotient")
        num = LaurentPoly({2 * m + 1: 1, -2 * m - 1: 1})
    elif kind == "even":
        if m < 1:
            raise ValueError("m must be >= 1 for the even quotient")
        num = LaurentPoly({2 * m: 1, -2 * m: -1})
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return num.divmod_exact(LaurentPoly({1: 1, -1: 1}))


def gauss_split(r: LaurentPoly, sign: str = "plus") -> LaurentPoly:
    """Solve ``r = g - bar(g)`` for ``g`` supported on positive exponents
    (``sign="plus"``) or negative exponents (``sign="minus"``).

    ``r`` must satisfy ``bar(r) == -r``.
    """
    if r.bar() != -r:
        raise ValueError(f"{r} is not anti-invariant under q -> q^-1")
    if sign in ("plus", "+"):
        return r.positive_part()
    if sign in ("minus", "-"):
        return r.negative_part()
    raise ValueError(f"unknown sign {sign!r}")
