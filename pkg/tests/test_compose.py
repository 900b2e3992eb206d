import pytest

from cofreecomp import combinat as cb
from cofreecomp.basehopf import CSYM, SSYM, YSYM
from cofreecomp.combinat import LEAF, Composed
from cofreecomp.compose import (
    ComposedCoalgebra,
    composed_morphism,
    composition,
    diagram_edges,
    dims_comb_recursion,
    dims_general,
    dims_tree_recursion,
    nine_compositions,
    primitive_spanning_set,
    recursion_dims,
)
from cofreecomp.exactalg import Lin, identity, primitive_basis

EXPECTED = {
    "ssym.ssym": [1, 2, 6, 23, 106, 570],
    "ysym.ssym": [1, 2, 6, 22, 94, 464],
    "csym.ssym": [1, 2, 5, 16, 65, 326],
    "ssym.ysym": [1, 2, 6, 22, 92, 428],
    "ysym.ysym": [1, 2, 6, 21, 80, 322],
    "csym.ysym": [1, 2, 5, 15, 51, 188],
    "ssym.csym": [1, 2, 5, 15, 54, 235],
    "ysym.csym": [1, 2, 5, 14, 42, 132],
    "csym.csym": [1, 2, 4, 8, 16, 32],
}


def test_names_read_leaf_over_root():
    E = composition("ssym", "csym")
    assert E.root is CSYM and E.leaf is SSYM
    assert E.name == "ssym.csym"
    assert set(nine_compositions()) == set(EXPECTED)


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_dims(name):
    E = nine_compositions()[name]
    assert E.dims(5) == EXPECTED[name]
    leaf, root = name.split(".")
    rec = recursion_dims(root, leaf, 5)
    if rec is not None:
        assert rec == EXPECTED[name]


def test_recursions_agree_with_general_formula():
    cat = [1, 1, 2, 5, 14, 42, 132, 429]
    ones = [1] * 8
    assert dims_comb_recursion(cat, 7) == dims_general(ones, cat, 7)
    assert dims_tree_recursion(ones, 7) == dims_general(cat, ones, 7)
    with pytest.raises(ValueError):
        dims_tree_recursion([0, 1], 1)


def test_unit_and_counit():
    E = composition("ysym", "ysym")
    assert E.unit == Composed(LEAF, (LEAF,))
    assert E.counit(E.unit) == 1
    assert all(E.counit(e) == 0 for e in E.basis(2))


def test_coproduct_example_csym_csym():
    E = composition("csym", "csym")
    e = cb.composition_to_composed((1, 3))
    got = {(cb.composed_to_composition(a), cb.composed_to_composition(b)) for a, b in E.coproduct(e)}
    assert got == {((1,), (1, 3)), ((1, 1), (3,)), ((1, 2), (2,)), ((1, 3), (1,))}


def test_coproduct_rejects_bad_arity():
    E = composition("ysym", "ysym")
    with pytest.raises(ValueError):
        E.coproduct(Composed(cb.comb_tree(1), (LEAF,)))


def test_parse_and_format():
    E = composition("ysym", "ysym")
    e = E.parse("{.|(. .)|.}/(. (. .))")
    assert E.degree(e) == 3
    assert E.fmt(e) == "{.|(. .)|.}/(. (. .))"
    with pytest.raises(cb.ParseError):
        E.parse("{.|.}/(. (. .))")


def test_primitive_spanning_set_example():
    E = composition("csym", "csym")
    pc = {k: primitive_basis(CSYM, k) for k in range(1, 4)}
    assert len(primitive_spanning_set(E, 1, pc, pc)) == 2
    assert primitive_spanning_set(E, 2, pc, pc) == []


def test_morphism_multilinear():
    f = composed_morphism(lambda t: Lin.term(cb.kappa(t)), identity)
    E = composition("ysym", "ysym")
    for e in E.basis(3):
        (img,) = f(e)
        assert img.outer == e.outer
        assert img.inner == tuple(map(cb.degree, e.inner))


def test_diagram_has_twelve_edges():
    edges = diagram_edges()
    assert len(edges) == 12
    assert len({(s, t) for s, t, _ in edges}) == 12


def test_custom_name():
    E = ComposedCoalgebra(YSYM, CSYM, name="x")
    assert E.name == "x"
