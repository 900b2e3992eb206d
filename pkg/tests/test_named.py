import pytest

from cofreecomp import combinat as cb
from cofreecomp.combinat import SimplexFace
from cofreecomp.exactalg import Lin, antipode, convolution_check
from cofreecomp.named import (
    CC,
    DELTASYM,
    cc_coproduct,
    cc_coproduct_composed,
    cc_left,
    cc_product_left,
    cc_product_right,
    cksym,
    cksym_coproduct,
    cksym_product,
    composite,
    deltasym,
    deltasym_coproduct_native,
    deltasym_coproduct_transported,
    deltasym_product,
    paint_fully,
    psym,
    psym_coaction,
    psym_product,
)


def test_cc_coproduct_example():
    assert cc_coproduct((1, 3)) == Lin(
        {((1,), (1, 3)): 1, ((1, 1), (3,)): 1, ((1, 2), (2,)): 1, ((1, 3), (1,)): 1}
    )


@pytest.mark.parametrize("n", range(7))
def test_cc_native_matches_composed(n):
    for c in CC.basis(n):
        assert cc_coproduct(c) == cc_coproduct_composed(c)


def test_cc_right_product_example():
    assert cc_product_right((1, 3), (2,)) == Lin({(1, 1, 3): 2, (1, 2, 2): 1, (1, 3, 1): 1})


def test_cc_flavors_differ_but_share_units():
    assert cc_product_right((2,), (1,)) == Lin.term((2,))
    assert cc_product_left((1,), (2,)) == Lin.term((2,))
    assert cc_product_right((1,), (2,)) != Lin.term((2,))


def test_cksym_coproduct_example():
    e = composite((2, 1, 2))
    expected = Lin()
    for a, b in [((1,), (2, 1, 2)), ((2,), (1, 1, 2)), ((2, 1), (1, 2)), ((2, 1, 1), (2,)), ((2, 1, 2), (1,))]:
        expected.add_term((composite(a), composite(b)), 1)
    assert cksym_coproduct(e) == expected


def test_cksym_product_example():
    got = cksym_product(composite((2, 1)), composite((1, 2, 1)))
    expected = Lin()
    for w, c in [((3, 2, 1), 1), ((1, 4, 1), 3), ((1, 2, 3), 1), ((2, 3, 1), 2), ((2, 2, 2), 1), ((1, 3, 2), 2)]:
        expected.add_term(composite(w), c)
    assert got == expected


def test_cksym_parse_forms():
    A = cksym()
    e = composite((2, 1, 2))
    assert A.parse("2,1,2") == e
    assert A.parse("2,1,2 @ (. (. .))") == e
    assert A.parse(A.fmt(e)) == e
    assert A.parse("{c1|c0|c1}/(. (. .))") == e
    with pytest.raises(cb.ParseError):
        A.parse("2,1 @ (. (. .))")
    with pytest.raises(cb.ParseError):
        A.parse("2,0,1")


@pytest.mark.parametrize("n", range(4))
def test_psym_unit_laws(n):
    P = psym()
    one = P.unit
    for q in P.basis(n):
        assert psym_product(q, one) == Lin.term(q)
        assert psym_product(one, q) == Lin.term(paint_fully(q))


def test_psym_coaction_counit():
    P = psym()
    for q in P.basis(3):
        rho = psym_coaction(q)
        assert sum(v for (e, d), v in rho.items() if d == cb.LEAF and e == q) == 1


def test_deltasym_coproduct_agrees():
    for n in range(8):
        for s in DELTASYM.basis(n):
            assert deltasym_coproduct_native(s) == deltasym_coproduct_transported(s)


def test_deltasym_swap_example():
    s, t = SimplexFace(1, ()), SimplexFace(3, (1,))
    got = deltasym_product(s, t)
    assert got == Lin({SimplexFace(4, (1, 2)): 2, SimplexFace(4, (1, 3)): 1, SimplexFace(4, (1, 4)): 1})
    assert got.coefficient_sum() == cc_product_right((1, 3), (2,)).coefficient_sum() == 4


def test_deltasym_variants():
    swap, noswap = deltasym("swap"), deltasym("noswap")
    assert swap.flavor == "left" and noswap.flavor == "right"
    s, t = SimplexFace(1, ()), SimplexFace(1, (1,))
    assert deltasym_product(s, t, "swap") == deltasym_product(t, s, "noswap")
    with pytest.raises(ValueError):
        deltasym("both")


@pytest.mark.parametrize("conn_fn", [psym, cksym, cc_left, deltasym], ids=["psym", "cksym", "cc_left", "deltasym"])
def test_antipodes_on_identity_side(conn_fn):
    conn = conn_fn()
    cache = {}
    side = conn.identity_side
    for n in range(4):
        for b in conn.basis(n):
            s = lambda x: antipode(conn, x, side, cache)  # noqa: E731
            assert convolution_check(conn, b, s, side) == Lin()


def test_left_flavor_has_no_right_sided_antipode():
    # In degree 1, S(e) . 1 = f(S(e)) * 1 is a multiple of the single element
    # x_1 * 1, so e + S(e) . 1 = 0 has no solution for the other basis element.
    conn = cc_left()
    g = conn.star(1, conn.unit)
    assert len(g) == 1
    (others,) = [e for e in conn.basis(1) if Lin.term(e) != g]
    cache = {}
    s = lambda x: antipode(conn, x, "right", cache)  # noqa: E731
    assert convolution_check(conn, others, s, "right") != Lin()
