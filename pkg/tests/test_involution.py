import pytest

from fockcanon import combinatorics as cb
from fockcanon.canonical import dual_labels
from fockcanon.fock import FockVector
from fockcanon.involution import bar_fock, bar_matrix_block, bar_phi, c_statistic
from fockcanon.laurent import LaurentPoly as L, ONE, ZERO

NL = [(2, 2), (2, 3), (3, 2)]


def brute_c(ks, r, n, l):
    def ab(k):
        for a in range(1, n + 1):
            for b in range(1, l + 1):
                if (k - a - n * (b - 1)) % (n * l) == 0:
                    return a, b
    total = 0
    for i in range(r):
        for j in range(i + 1, r):
            (ai, bi), (aj, bj) = ab(ks[i]), ab(ks[j])
            total += int(bi == bj) - int(ai == aj)
    return total


def test_c_statistic_examples():
    assert c_statistic((0, -1), 0, 2, 2) == 0
    assert c_statistic((0, -1), 1, 2, 2) == 0
    assert c_statistic((1, -1), 2, 2, 2) == -1
    assert c_statistic((3, -1, -2), 3, 2, 2) == brute_c((3, -1, -2), 3, 2, 2)


@pytest.mark.parametrize("n,l", NL)
def test_c_statistic_matches_brute_force(n, l):
    for d in range(6):
        for lam in cb.partitions(d):
            ks = cb.beta_sequence(lam, 1, d + 2)
            for r in range(len(ks) + 1):
                assert c_statistic(ks, r, n, l) == brute_c(ks, r, n, l)


def test_bar_examples():
    vac = FockVector.phi((), 0, 2, 2)
    assert bar_fock(vac) == vac
    one = FockVector.phi((1,), 0, 2, 2)
    assert bar_fock(one) == one
    assert bar_fock(one, r_extra=1) == one
    three = FockVector.phi((3,), 0, 2, 2)
    want = three + FockVector.phi((1, 1, 1), 0, 2, 2).scale(L({1: 1, -1: -1}))
    assert bar_fock(three) == want


def test_bar_is_semilinear():
    v = FockVector.phi((2,), 0, 2, 2).scale(L({3: 1}))
    assert bar_fock(v) == bar_fock(FockVector.phi((2,), 0, 2, 2)).scale(L({-3: 1}))


def test_block_examples():
    A = bar_matrix_block(2, 2, 0, 0)
    assert A.labels == [()] and A[((), ())] == ONE
    A = bar_matrix_block(2, 2, 0, 3, (0, 0))
    assert A.labels == [(3,), (1, 1, 1)]
    assert A.as_rows() == [[ONE, L({1: 1, -1: -1})], [ZERO, ONE]]


@pytest.mark.parametrize("n,l", NL)
def test_reversal_length_independence(n, l):
    for s in (0, 1):
        for d in range(5):
            for lam in cb.partitions(d):
                v = FockVector.phi(lam, s, n, l)
                assert bar_fock(v, r_extra=n * l) == bar_fock(v)


@pytest.mark.parametrize("n,l", NL)
def test_involutive_small(n, l):
    for s in (0, 1):
        for d in range(5):
            for lam in cb.partitions(d):
                v = FockVector.phi(lam, s, n, l)
                assert bar_fock(bar_fock(v)) == v


@pytest.mark.parametrize("n,l", NL)
def test_rows_preserve_component_and_degree(n, l):
    for s in (0, 1):
        for d in range(6):
            for lam in cb.partitions(d):
                src = cb.iota_l(lam, s, n, l).charges
                src_n = cb.iota_n(lam, s, n, l).charges
                for mu in bar_phi(lam, s, n, l):
                    assert sum(mu) == d
                    assert cb.iota_l(mu, s, n, l).charges == src
                    assert cb.iota_n(mu, s, n, l).charges == src_n


def _blocks(n, l, s, d):
    for ch in sorted({cb.iota_l(lam, s, n, l).charges for lam in cb.partitions(d)}):
        yield bar_matrix_block(n, l, s, d, ch)


@pytest.mark.parametrize("n,l", NL)
def test_block_structure(n, l):
    for s in (0, 1):
        for d in range(6):
            for A in _blocks(n, l, s, d):
                for lam in A.labels:
                    assert A[(lam, lam)] == ONE
                    for mu in A.labels:
                        if A[(lam, mu)] and lam != mu:
                            assert cb.dominance_leq(mu, lam)
                # bar(A) A = I
                for lam in A.labels:
                    for mu in A.labels:
                        tot = sum((A[(lam, nu)].bar() * A[(nu, mu)] for nu in A.labels), L())
                        assert tot == (ONE if lam == mu else ZERO)


@pytest.mark.parametrize("s", [0, 1])
def test_a_duality(s):
    for d in range(5):
        for A in _blocks(2, 3, s, d):
            for lam in A.labels:
                lam2 = dual_labels(lam, s, 2, 3)
                row = bar_phi(lam2, s, 3, 2)
                for mu in A.labels:
                    mu2 = dual_labels(mu, s, 2, 3)
                    assert A[(lam, mu)] == row.get(mu2, ZERO).sub_minus_qinv()
