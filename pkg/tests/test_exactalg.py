from fractions import Fraction

import pytest

from cofreecomp.basehopf import CSYM, SSYM, YSYM
from cofreecomp.exactalg import (
    Lin,
    antipode,
    antipode_connected,
    format_lin,
    iterated_coproduct,
    kernel,
    lin_tensor,
    lin_to_json,
    primitive_basis,
    primitive_dimension,
    primitive_series_from_dims,
    rank,
    reduced_coproduct,
    series_inverse_one_minus,
)


def test_lin_prunes_zeros_and_normalizes():
    x = Lin([("a", 1), ("b", 2), ("a", -1)])
    assert x == {"b": 2}
    y = Lin.term("c", Fraction(4, 2))
    assert type(y["c"]) is int
    assert (x - x) == Lin()
    assert 3 * x == {"b": 6}
    assert (x + y).coefficient_sum() == 4


def test_lin_tensor():
    t = lin_tensor(Lin({"a": 2}), Lin({"x": 1, "y": 3}))
    assert t == {("a", "x"): 2, ("a", "y"): 6}


def test_format_lin():
    x = Lin({(1, 3): 2, (2,): Fraction(-1, 2)})
    assert format_lin(x, str, lambda k: (sum(k), k)) == "-1/2 (2,) + 2 (1, 3)"
    assert format_lin(Lin(), str, lambda k: k) == "0"
    assert lin_to_json(Lin({"a": 1}), str, str) == [{"coefficient": "1", "basis": "a"}]


def test_rank_and_kernel():
    vs = [{"a": 1, "b": 1}, {"b": 1, "c": 1}, {"a": 1, "c": -1}]
    assert rank(vs) == 2
    ker = kernel(list(zip("xyz", vs)))
    assert len(ker) == 1
    (k,) = ker
    total = Lin()
    for name, v in zip("xyz", vs):
        total.iadd(Lin(v), k.get(name, 0))
    assert total == Lin()


def test_rank_over_fractions():
    vs = [{"a": Fraction(1, 2), "b": 1}, {"a": 1, "b": 2}]
    assert rank(vs) == 1


def test_iterated_coproduct_counts():
    # CSym: Delta^(k) x_n has binom(n+k, k) terms
    assert len(iterated_coproduct(CSYM, 3, 2)) == 10
    assert iterated_coproduct(YSYM, (( ), ()), 0) == Lin.term(((( ), ()),))


def test_reduced_coproduct_of_generator():
    assert reduced_coproduct(SSYM, (1,)) == Lin()
    assert reduced_coproduct(CSYM, 2) == Lin.term((1, 1))


@pytest.mark.parametrize(
    "alg,expected",
    [(SSYM, [1, 1, 3, 13, 71]), (YSYM, [1, 1, 2, 5, 14]), (CSYM, [1, 0, 0, 0, 0])],
)
def test_primitive_dimensions(alg, expected):
    assert [primitive_dimension(alg, n) for n in range(1, 6)] == expected


def test_primitive_basis_is_in_kernel():
    for v in primitive_basis(YSYM, 3):
        red = Lin()
        for b, c in v.items():
            red.iadd(reduced_coproduct(YSYM, b), c)
        assert red == Lin()


def test_csym_antipode_is_signed():
    for n in range(7):
        assert antipode_connected(CSYM, n) == Lin.term(n, (-1) ** n)


def test_antipode_rejects_bad_side():
    with pytest.raises(ValueError):
        antipode(CSYM, 1, "up")


def test_series():
    assert series_inverse_one_minus([0, 1, 1], 5) == [1, 1, 2, 3, 5, 8]
    assert series_inverse_one_minus([0, 2], 4) == [1, 2, 4, 8, 16]
    with pytest.raises(ValueError):
        series_inverse_one_minus([1, 1], 3)
    assert primitive_series_from_dims([1, 2, 4, 8, 16]) == [0, 2, 0, 0, 0]
