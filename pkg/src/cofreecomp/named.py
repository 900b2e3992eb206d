"""Concrete one-sided Hopf algebras: painted trees, composite trees,
composition trees and simplex faces."""

from __future__ import annotations

from functools import lru_cache
from typing import Any, Callable

from . import combinat as cb
from .basehopf import CSYM, kappa_basis
from .combinat import Composed, SimplexFace
from .compose import ComposedCoalgebra, composition
from .exactalg import GradedCoalgebra, Lin, identity
from .operadic import CSYM_OPERAD, YSYM_OPERAD, Connection, make_connection


def _relabel(x: Lin, f: Callable[[Any], Any]) -> Lin:
    return Lin((f(k), v) for k, v in x.items())


def _relabel_pairs(x: Lin, f: Callable[[Any], Any]) -> Lin:
    return Lin((tuple(map(f, k)), v) for k, v in x.items())


# ---------------------------------------------------------------------------
# painted trees: YSym o YSym, connection on YSym through the identity


def paint_fully(q: Composed) -> Composed:
    """``q+``: the same shape with every node painted."""
    shape = YSYM_OPERAD.compose(q.outer, q.inner)
    return Composed(shape, (cb.LEAF,) * (cb.degree(shape) + 1))


@lru_cache(maxsize=None)
def psym() -> Connection:
    E = ComposedCoalgebra(YSYM_OPERAD.alg, YSYM_OPERAD.alg, name="psym")
    return make_connection(E, YSYM_OPERAD, identity, "right", name="psym")


def psym_coproduct(p: Composed) -> Lin:
    return psym().coproduct(p)


def psym_product(p: Composed, q: Composed) -> Lin:
    return psym().product(p, q)


def psym_coaction(p: Composed) -> Lin:
    return psym().rho(p)


# ---------------------------------------------------------------------------
# composite trees: YSym o CSym, connection on CSym through kappa


class CompositeTrees(ComposedCoalgebra):
    """YSym o CSym written as weighted trees ``w0,...,wm @ tree``."""

    def __init__(self) -> None:
        super().__init__(YSYM_OPERAD.alg, CSYM, name="cksym")

    def fmt(self, e):
        shape, weights = cb.composite_view(e)
        return ",".join(map(str, weights)) + " @ " + cb.format_tree(shape)

    def parse(self, text):
        body = text.strip()
        if body.startswith("{"):
            return super().parse(body)
        if "@" in body:
            wtext, ttext = body.split("@", 1)
            shape = cb.parse_tree(ttext)
        else:
            wtext, shape = body, None
        weights = cb._parse_ints(wtext, "weight")
        if not weights:
            raise cb.ParseError("missing weights", text, 0)
        if shape is None:
            shape = cb.comb_tree(len(weights) - 1)
        try:
            return cb.from_composite(shape, weights)
        except ValueError as exc:
            raise cb.ParseError(str(exc), text, 0) from None


@lru_cache(maxsize=None)
def cksym() -> Connection:
    return make_connection(CompositeTrees(), CSYM_OPERAD, kappa_basis, "left", name="cksym")


def composite(weights, shape=None) -> Composed:
    """Composite tree from weights; the shape defaults to the comb."""
    if shape is None:
        shape = cb.comb_tree(len(weights) - 1)
    return cb.from_composite(shape, tuple(weights))


def cksym_coproduct(a: Composed) -> Lin:
    return cksym().coproduct(a)


def cksym_product(a: Composed, b: Composed) -> Lin:
    return cksym().product(a, b)


# ---------------------------------------------------------------------------
# composition trees: CSym o CSym on compositions


class CompositionTrees(GradedCoalgebra):
    """CSym o CSym indexed by compositions of ``n + 1``."""

    name = "cc"
    unit = (1,)

    def degree(self, c):
        return sum(c) - 1

    def basis(self, n):
        return cb.compositions(n)

    def sort_key(self, c):
        return (sum(c), c)

    @lru_cache(maxsize=None)
    def coproduct(self, c):
        """One splitting per leaf: leaf ``i`` cuts the part containing it in two."""
        out = Lin()
        for j, a in enumerate(c):
            for r in range(1, a + 1):
                out.add_term((c[:j] + (r,), (a + 1 - r,) + c[j + 1:]), 1)
        return out

    def fmt(self, c):
        return cb.format_composition(c)

    def parse(self, text):
        return cb.parse_composition(text)


CC = CompositionTrees()


def transport_connection(
    conn: Connection,
    source: GradedCoalgebra,
    to: Callable[[Any], Any],
    back: Callable[[Any], Any],
    name: str,
) -> Connection:
    """Move a connection along a basis bijection ``to: source -> conn.source``."""
    if conn.flavor == "right":
        def act(x, d):
            return _relabel(conn.star(to(x), d), back)
    else:
        def act(d, x):
            return _relabel(conn.star(d, to(x)), back)
    return Connection(name, source, conn.target, lambda x: conn.f(to(x)), act, conn.flavor)


@lru_cache(maxsize=None)
def cc_connection(flavor: str) -> Connection:
    E = composition("csym", "csym")
    base = make_connection(E, CSYM_OPERAD, identity, flavor)
    return transport_connection(
        base, CC, cb.composition_to_composed, cb.composed_to_composition, name=f"cc/{flavor}"
    )


def cc_right() -> Connection:
    return cc_connection("right")


def cc_left() -> Connection:
    return cc_connection("left")


def cc_coproduct(c: tuple) -> Lin:
    return CC.coproduct(c)


def cc_product_right(c: tuple, c2: tuple) -> Lin:
    return cc_right().product(c, c2)


def cc_product_left(c: tuple, c2: tuple) -> Lin:
    return cc_left().product(c, c2)


def cc_coproduct_composed(c: tuple) -> Lin:
    """The same coproduct computed through CSym o CSym."""
    E = composition("csym", "csym")
    return _relabel_pairs(E.coproduct(cb.composition_to_composed(c)), cb.composed_to_composition)


# ---------------------------------------------------------------------------
# simplex faces


class SimplexFaces(GradedCoalgebra):
    name = "deltasym"
    unit = SimplexFace(0, ())

    def degree(self, s):
        return s.n

    def basis(self, n):
        return cb.subsets(n)

    def sort_key(self, s):
        return (s.n, s.subset)

    @lru_cache(maxsize=None)
    def coproduct(self, s):
        return deltasym_coproduct_native(s)

    def fmt(self, s):
        return cb.format_subset(s)

    def parse(self, text):
        return cb.parse_subset(text)


DELTASYM = SimplexFaces()


def deltasym_coproduct_native(s: SimplexFace) -> Lin:
    n, sub = s
    out = Lin()
    for i in range(n + 1):
        left = SimplexFace(i, tuple(x for x in sub if x <= i))
        right = SimplexFace(n - i, tuple(x - i for x in sub if x > i))
        out.add_term((left, right), 1)
    return out


def deltasym_coproduct_transported(s: SimplexFace) -> Lin:
    return _relabel_pairs(CC.coproduct(cb.phi(s)), cb.phi_inv)


@lru_cache(maxsize=None)
def deltasym(variant: str = "swap") -> Connection:
    """Simplex faces with the product carried over from composition trees.

    ``swap``: ``phi(s . t) = phi(t) . phi(s)`` (an anti-isomorphism, a left
    connection); ``noswap``: ``phi(s . t) = phi(s) . phi(t)`` (right).
    """
    right = cc_right()
    if variant == "noswap":
        return transport_connection(right, DELTASYM, cb.phi, cb.phi_inv, name="deltasym/noswap")
    if variant != "swap":
        raise ValueError(f"variant must be 'swap' or 'noswap', not {variant!r}")

    def act(d, s):
        return _relabel(right.star(cb.phi(s), d), cb.phi_inv)

    return Connection("deltasym", DELTASYM, CSYM, lambda s: right.f(cb.phi(s)), act, "left")


def deltasym_product(s: SimplexFace, t: SimplexFace, variant: str = "swap") -> Lin:
    return deltasym(variant).product(s, t)
