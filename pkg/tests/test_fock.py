import pytest

from fockcanon import combinatorics as cb
from fockcanon.combinatorics import ChargedMultipartition as CMP
from fockcanon.fock import (FockVector, chevalley_action, heisenberg_B, wedge_action_oracle,
                            weight)
from fockcanon.laurent import LaurentPoly as L, ONE, qpow

VAC = CMP(((), ()), (0, 0))
ONE_LEFT = CMP(((1,), ()), (0, 0))
ONE_RIGHT = CMP(((), (1,)), (0, 0))
NL = [(2, 2), (2, 3), (3, 2)]


def phi(cmp):
    return FockVector.phi_multi(cmp, 2, 2)


def test_phi_examples():
    assert phi(VAC).terms == {(): ONE}
    assert phi(ONE_LEFT).terms == {(1, 1, 1): ONE}
    v = FockVector.from_phi({(2, 1): qpow(3), (3,): L({0: 2})}, 0, 2, 2)
    assert v.phi_coefficients() == {(2, 1): qpow(3), (3,): L({0: 2})}


def test_chevalley_examples():
    assert chevalley_action("f:0", "n", phi(VAC)) == phi(ONE_LEFT).scale(qpow(1)) + phi(ONE_RIGHT)
    assert chevalley_action("e:0", "n", phi(ONE_RIGHT)) == phi(VAC).scale(qpow(-1))
    assert chevalley_action("t:0", "n", phi(VAC)) == phi(VAC).scale(qpow(2))
    assert chevalley_action("f:1", "n", phi(VAC)).is_zero()


def test_chevalley_rejects_bad_input():
    with pytest.raises(ValueError):
        chevalley_action("f:2", "n", phi(VAC))
    with pytest.raises(ValueError):
        chevalley_action("f:0", "x", phi(VAC))
    with pytest.raises(ValueError):
        chevalley_action("g:0", "n", phi(VAC))


def test_oracle_examples():
    v = phi(VAC)
    assert wedge_action_oracle("f:0", "n", v) == chevalley_action("f:0", "n", v)
    # tail eigenvalue q^{l [i = 0]} for the N-side
    assert wedge_action_oracle("t:0", "n", v) == v.scale(qpow(2))
    assert wedge_action_oracle("t:1", "n", v) == v


@pytest.mark.parametrize("n,l", NL)
@pytest.mark.parametrize("side", ["n", "l"])
def test_e_after_f_on_vacuum_is_q_integer(n, l, side):
    # e_i f_i v0 = [<wt, alpha_i>] v0 for a highest weight vector v0
    period = n if side == "n" else l
    v = FockVector.phi((), 0, n, l)
    for i in range(period):
        t = chevalley_action(("t", i), side, v)
        (k,) = t.terms[()].exponents()
        qint = sum((qpow(k - 1 - 2 * j) for j in range(k)), L())
        ef = chevalley_action(("e", i), side, chevalley_action(("f", i), side, v))
        assert ef == v.scale(qint)


@pytest.mark.parametrize("n,l", NL)
def test_oracle_equivalence_small(n, l):
    for s in (0, 1):
        for d in range(4):
            for lam in cb.partitions(d):
                v = FockVector.phi(lam, s, n, l)
                for side, period in (("n", n), ("l", l)):
                    for name in "fet":
                        for i in range(period):
                            g = (name, i)
                            assert chevalley_action(g, side, v) == wedge_action_oracle(g, side, v)


@pytest.mark.parametrize("n,l", NL)
def test_component_stability_and_size_change(n, l):
    for s in (0, 1):
        for d in range(5):
            for lam in cb.partitions(d):
                v = FockVector.phi(lam, s, n, l)
                for side, period, iota in (("n", n, cb.iota_l), ("l", l, cb.iota_n)):
                    src = iota(lam, s, n, l)
                    for name, delta in (("f", 1), ("e", -1), ("t", 0)):
                        for i in range(period):
                            for mu in chevalley_action((name, i), side, v).terms:
                                out = iota(mu, s, n, l)
                                assert out.charges == src.charges
                                assert out.size == src.size + delta


@pytest.mark.parametrize("n,l", NL)
def test_t_conjugates_f_by_q_squared(n, l):
    for lam in cb.partitions(3):
        v = FockVector.phi(lam, 0, n, l)
        for i in range(n):
            lhs = chevalley_action(("t", i), "n", chevalley_action(("f", i), "n", v))
            rhs = chevalley_action(("f", i), "n", chevalley_action(("t", i), "n", v))
            assert lhs == rhs.scale(qpow(-2))


def test_heisenberg_on_vacuum():
    v = FockVector.phi((), 0, 2, 2)
    b = heisenberg_B(-1, v)
    assert b.terms and all(sum(mu) == 4 for mu in b.terms)
    assert b == heisenberg_B(-1, v, extra=12)
    with pytest.raises(ValueError):
        heisenberg_B(0, v)


GAMMA_1 = {
    (2, 2): L({2: 1, 0: 2, -2: 1}),
    (2, 3): L({4: 1, 2: 2, 0: 2, -2: 1}),
    (3, 2): L({2: 1, 0: 2, -2: 2, -4: 1}),
}


@pytest.mark.parametrize("n,l", NL)
def test_b1_bminus1_commutator_is_scalar(n, l):
    for s in (0, 1):
        for d in range(3):
            for lam in cb.partitions(d):
                v = FockVector.phi(lam, s, n, l)
                c = heisenberg_B(1, heisenberg_B(-1, v)) - heisenberg_B(-1, heisenberg_B(1, v))
                assert c == v.scale(GAMMA_1[(n, l)])
    # classical limit: n*l fermion shifts
    assert GAMMA_1[(n, l)](1) == n * l


@pytest.mark.parametrize("n,l", NL)
def test_heisenberg_commutes_with_lowering(n, l):
    for lam in [(), (1,), (2,), (1, 1)]:
        v = FockVector.phi(lam, 0, n, l)
        for m in (-1, 1):
            Bv = heisenberg_B(m, v)
            for side, period in (("n", n), ("l", l)):
                for i in range(period):
                    g = ("f", i)
                    assert chevalley_action(g, side, Bv) == heisenberg_B(m, chevalley_action(g, side, v))


def test_weight_examples():
    assert weight(VAC, 2) == (2, 0)
    for parts in [((), ()), ((2,), (1,)), ((1, 1), ())]:
        assert weight(CMP(parts, (1, 0)), 2) == (1, 1)


@pytest.mark.parametrize("n,l", NL)
def test_weight_level(n, l):
    for s in (-1, 0, 2):
        for lam in cb.partitions(3):
            assert sum(weight(cb.iota_l(lam, s, n, l), n)) == n
            assert sum(weight(cb.iota_n(lam, s, n, l), l)) == l


@pytest.mark.parametrize("n,l", NL)
def test_t_eigenvalue_matches_weight(n, l):
    # U_q(sl_l) reads the l-labeling (level n), U_q(sl_n) the n-labeling (level l)
    for s in (-1, 0, 1):
        for d in range(5):
            for lam in cb.partitions(d):
                v = FockVector.phi(lam, s, n, l)
                for side, iota, period, level in (("l", cb.iota_l, l, n), ("n", cb.iota_n, n, l)):
                    w = weight(iota(lam, s, n, l), level)
                    for r in range(period):
                        assert chevalley_action(("t", r), side, v) == v.scale(qpow(w[r]))


def test_json_round_trip():
    v = FockVector.from_phi({(2, 1): L({1: 1, -1: -3}), (): ONE}, 0, 2, 3)
    assert FockVector.from_json(v.to_json()) == v
