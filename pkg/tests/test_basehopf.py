from math import comb

import pytest

from cofreecomp import combinat as cb
from cofreecomp.basehopf import (
    CSYM,
    SSYM,
    YSYM,
    base_product,
    comb_basis,
    csym_product_by_grafting,
    divided_power_iso_check,
    kappa_hat,
    tau_hat,
)
from cofreecomp.exactalg import Lin, antipode, extend, extend_tensor, product_lin
from cofreecomp.verify import check_antipode, check_associative, check_bialgebra, check_coalgebra


def test_ssym_small_product():
    assert SSYM.product((1,), (1,)) == Lin({(1, 2): 1, (2, 1): 1})


def test_ssym_coproduct_standardizes():
    assert SSYM.coproduct((2, 3, 1)) == Lin(
        {((), (2, 3, 1)): 1, ((1,), (2, 1)): 1, ((1, 2), (1,)): 1, ((2, 3, 1), ()): 1}
    )


def test_ysym_small_product():
    p = YSYM.product((( ), ()), (( ), ()))
    assert len(p) == 2 and set(p.values()) == {1}


def test_product_sizes():
    # |F_u . F_v| counts shuffles-with-grafting: binom(|u|+|v|, |v|)
    for u in cb.permutations(2):
        for v in cb.permutations(2):
            assert SSYM.product(u, v).coefficient_sum() == comb(4, 2)


def test_csym_divided_powers():
    assert divided_power_iso_check(8)
    for m in range(5):
        for n in range(5 - m):
            assert CSYM.product(m, n) == Lin.term(m + n, comb(m + n, n))
            assert csym_product_by_grafting(m, n) == CSYM.product(m, n)


def test_base_product_alias():
    assert base_product(YSYM, cb.comb_tree(1), cb.LEAF) == Lin.term(cb.comb_tree(1))


@pytest.mark.parametrize("alg,cap", [(SSYM, 4), (YSYM, 5), (CSYM, 6)])
def test_hopf_laws(alg, cap):
    for check in (check_coalgebra, check_bialgebra, check_associative, check_antipode):
        r = check(alg, cap)
        assert r.passed, r.line()


def _is_hopf_map(f, src, tgt, n_max):
    for n in range(n_max + 1):
        for b in src.basis(n):
            lhs = extend_tensor([f, f], src.coproduct(b))
            if lhs != extend(tgt.coproduct, f(b)):
                return False
    for n in range(n_max + 1):
        for i in range(n + 1):
            for a in src.basis(i):
                for b in src.basis(n - i):
                    lhs = extend(f, src.product(a, b))
                    if lhs != product_lin(tgt, f(a), f(b)):
                        return False
    return True


def test_tau_and_kappa_are_hopf_maps():
    assert _is_hopf_map(lambda w: tau_hat(Lin.term(w)), SSYM, YSYM, 4)
    assert _is_hopf_map(lambda t: kappa_hat(Lin.term(t)), YSYM, CSYM, 5)


def test_comb_embedding_is_coalgebra_map():
    for n in range(6):
        lhs = extend_tensor([comb_basis, comb_basis], CSYM.coproduct(n))
        assert lhs == extend(YSYM.coproduct, comb_basis(n))


def test_ysym_antipode_degree_two_sums_to_sign():
    cache = {}
    for t in cb.trees(3):
        s = antipode(YSYM, t, "right", cache)
        # kappa(S(t)) = S(kappa(t)) = -x_3
        assert kappa_hat(s) == Lin.term(3, -1)
