import pytest
from hypothesis import given, strategies as st

from fockcanon.laurent import (NonExactDivision, LaurentPoly, bar, gauss_split, qpow,
                               riv_coefficient)

L = LaurentPoly
polys = st.dictionaries(st.integers(-8, 8), st.integers(-5, 5), max_size=6).map(L)
positive = st.dictionaries(st.integers(1, 8), st.integers(-5, 5), max_size=5).map(L)


def test_zero_is_empty():
    assert L({0: 0, 3: 0}).coeffs == {}
    assert not L()
    assert L({1: 2}) - L({1: 2}) == L()


def test_bar_examples():
    assert bar(L({2: 1, 0: 2})) == L({-2: 1, 0: 2})
    assert bar(L()) == L()
    a = L({1: 1, -1: -1})
    assert bar(a) == -a


@pytest.mark.parametrize("kind,m,expected", [
    ("odd", 0, L({0: 1})),
    ("odd", 1, L({2: 1, 0: -1, -2: 1})),
    ("even", 1, L({1: 1, -1: -1})),
])
def test_riv_examples(kind, m, expected):
    assert riv_coefficient(kind, m) == expected


@pytest.mark.parametrize("m", range(0, 51))
def test_riv_multiplies_back(m):
    qq = L({1: 1, -1: 1})
    assert riv_coefficient("odd", m) * qq == L({2 * m + 1: 1, -2 * m - 1: 1})
    if m >= 1:
        assert riv_coefficient("even", m) * qq == L({2 * m: 1, -2 * m: -1})


def test_exact_division_rejects_remainder():
    with pytest.raises(NonExactDivision):
        L({1: 1}).divmod_exact(L({1: 1, 0: 1}))


def test_gauss_split_examples():
    assert gauss_split(L({1: 1, -1: -1}), "plus") == qpow(1)
    assert gauss_split(L({3: 1, -3: -1, 1: 2, -1: -2}), "plus") == L({3: 1, 1: 2})
    assert gauss_split(L(), "minus") == L()


def test_gauss_split_rejects_symmetric_input():
    with pytest.raises(ValueError):
        gauss_split(L({1: 1, -1: 1}), "plus")


@given(polys)
def test_bar_involutive(p):
    assert p.bar().bar() == p


@given(positive)
def test_gauss_split_recovers(g):
    r = g - g.bar()
    assert gauss_split(r, "plus") == g
    assert gauss_split(r, "minus") == -g.bar()


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(polys)
def test_json_round_trip(p):
    assert L.from_json(p.to_json()) == p
    assert all(isinstance(k, str) for k in p.to_json())
