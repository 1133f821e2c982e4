import itertools

import pytest
from hypothesis import given, strategies as st

from fockcanon import combinatorics as cb
from fockcanon.combinatorics import ChargedMultipartition as CMP

NL = [(2, 2), (2, 3), (3, 2), (3, 3)]


def brute_decompose(k, n, l):
    hits = [(a, b, m) for a in range(1, n + 1) for b in range(1, l + 1) for m in range(-50, 50)
            if a + n * (b - 1) - n * l * m == k]
    assert len(hits) == 1
    return hits[0]


def test_beta_sequence_examples():
    assert cb.beta_sequence((), 0, 3) == (0, -1, -2)
    assert cb.beta_sequence((3,), 0, 3) == (3, -1, -2)
    assert cb.beta_sequence((2, 1), 0, 4) == (2, 0, -2, -3)
    with pytest.raises(ValueError):
        cb.beta_sequence((1, 1, 1), 0, 2)


@pytest.mark.parametrize("k,expected", [(0, (2, 2, 1)), (1, (1, 1, 0)), (3, (1, 2, 0))])
def test_decompose_examples(k, expected):
    assert cb.decompose_index(k, 2, 2) == expected


@pytest.mark.parametrize("n,l", NL)
def test_decompose_matches_search(n, l):
    for k in range(-30, 31):
        assert cb.decompose_index(k, n, l) == brute_decompose(k, n, l)


def test_iota_l_examples():
    assert cb.iota_l((), 0, 2, 2) == CMP(((), ()), (0, 0))
    assert cb.iota_l((3,), 0, 2, 2) == CMP(((), (1,)), (0, 0))
    assert cb.iota_l((1, 1, 1), 0, 2, 2) == CMP(((1,), ()), (0, 0))
    assert cb.iota_l((2, 1), 0, 2, 2) == CMP(((1,), (1,)), (1, -1))
    assert cb.iota_l_inv(CMP(((), (1,)), (0, 0)), 2, 2) == ((3,), 0)


@pytest.mark.parametrize("n,l", NL)
def test_labelings_round_trip(n, l):
    for s in range(-2, 3):
        for d in range(7):
            for lam in cb.partitions(d):
                a = cb.iota_l(lam, s, n, l)
                b = cb.iota_n(lam, s, n, l)
                assert len(a.parts) == l and len(b.parts) == n
                assert sum(a.charges) == s and sum(b.charges) == s
                assert cb.iota_l_inv(a, n, l) == (lam, s)
                assert cb.iota_n_inv(b, n, l) == (lam, s)


def test_inverse_checks_component_count():
    # every charge vector of the right length is hit; the wrong length is not
    good = CMP(((), ()), (1, -1))
    assert cb.iota_l_inv(good, 2, 2)[1] == 0
    with pytest.raises(ValueError):
        cb.iota_l_inv(CMP(((),), (0,)), 2, 2)


def test_dominance_examples():
    assert cb.dominance_leq((1, 1, 1), (3,))
    assert cb.dominance_leq((2, 2), (3, 1))
    assert not cb.dominance_leq((3, 1), (2, 2))
    assert not cb.dominance_leq((1,), (2,))


def test_reverse_lex_extends_dominance():
    for d in range(9):
        ps = cb.partitions(d)
        for i, j in itertools.combinations(range(len(ps)), 2):
            # a later partition never dominates an earlier one
            assert not (cb.dominance_leq(ps[i], ps[j]) and ps[i] != ps[j])


def test_phi_examples():
    assert cb.phi_exponent((), 0, 2, 2) == 0
    assert cb.phi_exponent((1, 1, 1), 0, 2, 2) == 2
    assert cb.phi_sign((1, 1, 1), 0, 2, 2) == 1


@pytest.mark.parametrize("n,l", NL[:3])
def test_phi_truncation_independent(n, l):
    for s in (0, 1):
        for d in range(6):
            for lam in cb.partitions(d):
                lam0, _ = cb.iota_l_inv(cb.vacuum(cb.iota_l(lam, s, n, l).charges), n, l)
                R = cb.truncation_length(max(d + len(lam), sum(lam0) + len(lam0)), n, l)
                assert cb.phi_exponent(lam, s, n, l, R) == cb.phi_exponent(lam, s, n, l, R + n * l)


def test_node_examples():
    empty = cb.vacuum((0, 0))
    add = cb.addable_nodes(empty, 2, 0)
    assert [(x.content, x.component) for x in add] == [(0, 1), (0, 2)]
    assert cb.removable_nodes(empty, 2, 0) == []
    below, above, total = cb.node_statistics(empty, add[0], 2)
    assert (below, above, total) == (0, 1, 2)


def _cylindrical_oracle(parts, charges, n):
    l = len(parts)

    def at(b, i):
        p = parts[b]
        return p[i - 1] if 1 <= i <= len(p) else 0
    for i in range(1, 40):
        for b in range(l - 1):
            if at(b + 1, i) < at(b, i + charges[b] - charges[b + 1]):
                return False
        if at(0, i) < at(l - 1, i + n + charges[-1] - charges[0]):
            return False
    for k in range(1, 40):
        colours = {(charges[b] + k - i) % n for b in range(l) for i in range(1, len(parts[b]) + 1)
                   if parts[b][i - 1] == k}
        if len(colours) == n:
            return False
    return True


def test_cylindrical_small_cases():
    assert cb.is_cylindrical(cb.vacuum((0, 0)), 2)
    assert cb.is_cylindrical(CMP(((), (1,)), (0, 0)), 2)
    # a single long row in the last component only meets zeros in the wrap-around clause
    assert cb.is_cylindrical(CMP(((), (5,)), (0, 0)), 2)
    # the wrap-around clause fails once the last component has n + 1 rows
    assert not cb.is_cylindrical(CMP(((), (1, 1, 1)), (0, 0)), 2)
    assert not cb.is_cylindrical(CMP(((3,), ()), (0, 0)), 2)
    with pytest.raises(ValueError):
        cb.is_cylindrical(CMP(((), ()), (0, 2)), 2)


@pytest.mark.parametrize("charges,n", [((0, 0), 2), ((1, 0), 2), ((2, 1, 0), 3), ((1, 1), 3)])
def test_cylindrical_matches_oracle(charges, n):
    for d in range(6):
        for parts in cb.multipartitions(d, len(charges)):
            assert cb.is_cylindrical(CMP(parts, charges), n) == _cylindrical_oracle(parts, charges, n)


@given(st.integers(2, 3), st.integers(2, 3), st.integers(-3, 3),
       st.lists(st.integers(1, 5), max_size=5))
def test_node_moves_change_size_by_one(n, l, s, raw):
    lam = tuple(sorted(raw, reverse=True))
    cmp = cb.iota_l(lam, s, n, l)
    for node in cb.addable_nodes(cmp, n):
        assert cb.add_node(cmp, node).size == cmp.size + 1
    for node in cb.removable_nodes(cmp, n):
        assert cb.remove_node(cmp, node).size == cmp.size - 1
