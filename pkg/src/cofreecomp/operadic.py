"""Hopf operads, connections, and the one-sided Hopf algebras they induce.

A connection ``f: E -> D`` comes in two flavors:

``right``
    ``E`` is a right ``D``-module, ``e . e' = e * f(e')``; the unit of ``E``
    is a right identity.
``left``
    ``E`` is a left ``D``-module, ``e . e' = f(e) * e'``; the unit of ``E``
    is a left identity.

For ``E = D o C`` (operad at the root) the right action grafts the pieces of
an iterated coproduct of ``e`` onto ``d``.  For ``E = C o D`` (operad at the
leaves) the left action splits ``d`` into one piece per leaf of ``e`` and
grafts them into the leaf objects.
"""

from __future__ import annotations

from typing import Any, Callable

from . import combinat as cb
from .basehopf import CSYM, YSYM
from .combinat import Composed
from .compose import BASE_MAPS, ComposedCoalgebra, composition
from .exactalg import (
    GradedCoalgebra,
    GradedConnectedHopf,
    Lin,
    antipode,
    extend,
    extend_tensor,
    iterated_coproduct,
    lin_tensor,
)


class HopfOperad:
    """A connected graded Hopf algebra with operadic composition ``gamma``."""

    def __init__(self, alg: GradedConnectedHopf, gamma: Callable[[Any, tuple], Any]):
        self.alg = alg
        self.gamma = gamma
        self.name = alg.name

    def compose(self, d: Any, forest: tuple) -> Any:
        if len(forest) != self.alg.degree(d) + 1:
            raise ValueError(f"{self.name}: arity mismatch in gamma")
        return self.gamma(d, tuple(forest))

    def compose_lin(self, d: Lin, forest: list[Lin]) -> Lin:
        out = Lin()
        for key, v in lin_tensor(d, *forest).items():
            out.add_term(self.compose(key[0], key[1:]), v)
        return out


def gamma_ysym(d: cb.Tree, forest: tuple) -> cb.Tree:
    return cb.graft_trees(tuple(forest), d)


def gamma_csym(m: int, combs: tuple) -> int:
    if len(combs) != m + 1:
        raise ValueError("arity mismatch in gamma")
    return m + sum(combs)


YSYM_OPERAD = HopfOperad(YSYM, gamma_ysym)
CSYM_OPERAD = HopfOperad(CSYM, gamma_csym)
OPERADS = {"ysym": YSYM_OPERAD, "csym": CSYM_OPERAD}


def operad_product(D: HopfOperad, a: Any, b: Any, swap: bool = False) -> Lin:
    """``a . b = gamma(b; Delta^(|b|) a)``; ``swap`` exchanges the roles of ``a`` and ``b``."""
    if swap:
        a, b = b, a
    out = Lin()
    for pieces, v in iterated_coproduct(D.alg, a, D.alg.degree(b)).items():
        out.add_term(D.compose(b, pieces), v)
    return out


class Connection:
    """A connection ``f: E -> D`` together with the module action it intertwines.

    Exposes the coalgebra interface of ``E`` plus the one-sided product, so a
    connection can be handed to anything expecting an algebra.
    """

    def __init__(
        self,
        name: str,
        source: GradedCoalgebra,
        target: GradedConnectedHopf,
        f: Callable[[Any], Lin],
        act: Callable[[Any, Any], Lin],
        flavor: str,
    ):
        if flavor not in ("left", "right"):
            raise ValueError(f"flavor must be 'left' or 'right', not {flavor!r}")
        self.name = name
        self.source = source
        self.target = target
        self._f = f
        self._act = act
        self.flavor = flavor
        self._fcache: dict = {}
        self._acache: dict = {}
        self._pcache: dict = {}

    # coalgebra interface of E
    @property
    def unit(self):
        return self.source.unit

    def degree(self, e):
        return self.source.degree(e)

    def basis(self, n):
        return self.source.basis(n)

    def coproduct(self, e):
        return self.source.coproduct(e)

    def counit(self, e):
        return self.source.counit(e)

    def sort_key(self, e):
        return self.source.sort_key(e)

    def fmt(self, e):
        return self.source.fmt(e)

    def parse(self, text):
        return self.source.parse(text)

    def dims(self, n_max):
        return self.source.dims(n_max)

    # connection structure
    @property
    def identity_side(self) -> str:
        """Side on which ``1_E`` acts as an identity."""
        return self.flavor

    def f(self, e) -> Lin:
        if e not in self._fcache:
            self._fcache[e] = self._f(e)
        return self._fcache[e]

    def f_lin(self, x: Lin) -> Lin:
        return extend(self.f, x)

    def star(self, x, y) -> Lin:
        """``e * d`` (right flavor) or ``d * e`` (left flavor), on basis elements."""
        key = (x, y)
        if key not in self._acache:
            self._acache[key] = self._act(x, y)
        return self._acache[key]

    def star_lin(self, x: Lin, y: Lin) -> Lin:
        out = Lin()
        for a, ca in x.items():
            for b, cb_ in y.items():
                out.iadd(self.star(a, b), ca * cb_)
        return out

    def product(self, e1, e2) -> Lin:
        key = (e1, e2)
        if key not in self._pcache:
            if self.flavor == "right":
                out = self.star_lin(Lin.term(e1), self.f(e2))
            else:
                out = self.star_lin(self.f(e1), Lin.term(e2))
            self._pcache[key] = out
        return self._pcache[key]

    def rho(self, e) -> Lin:
        return coaction_rho(self, e)

    def antipode(self, e, cache: dict | None = None) -> Lin:
        return one_sided_antipode(self, e, cache)

    def __repr__(self) -> str:
        return f"<Connection {self.name} -> {self.target.name} ({self.flavor})>"


def make_connection(
    E: ComposedCoalgebra,
    D: HopfOperad,
    lam: Callable[[Any], Lin],
    flavor: str,
    name: str | None = None,
) -> Connection:
    """Connection on ``D`` induced by a coalgebra map ``lam`` from the other factor.

    ``right``: ``E = D o C``, ``lam: C -> D``, ``f = gamma o (1 o lam)``.
    ``left``: ``E = C o D``, ``lam: C -> D``, ``f = gamma o (lam o 1)``.
    """
    name = name or f"{E.name}/{flavor}"
    if flavor == "right":
        if E.root is not D.alg:
            raise ValueError(f"right connections need {D.name} at the root of {E.name}")

        def f(e: Composed) -> Lin:
            return D.compose_lin(Lin.term(e.outer), [lam(c) for c in e.inner])

        def act(e: Composed, d: Any) -> Lin:
            out = Lin()
            for pieces, v in iterated_coproduct(E, e, D.alg.degree(d)).items():
                root = D.compose(d, tuple(p.outer for p in pieces))
                leaves = tuple(c for p in pieces for c in p.inner)
                out.add_term(Composed(root, leaves), v)
            return out

    elif flavor == "left":
        if E.leaf is not D.alg:
            raise ValueError(f"left connections need {D.name} at the leaves of {E.name}")

        def f(e: Composed) -> Lin:
            return D.compose_lin(lam(e.outer), [Lin.term(c) for c in e.inner])

        def act(d: Any, e: Composed) -> Lin:
            out = Lin()
            for pieces, v in iterated_coproduct(D.alg, d, E.degree(e)).items():
                leaves, k = [], 0
                for c in e.inner:
                    width = D.alg.degree(c) + 1
                    leaves.append(D.compose(c, pieces[k:k + width]))
                    k += width
                out.add_term(Composed(e.outer, tuple(leaves)), v)
            return out

    else:
        raise ValueError(f"flavor must be 'left' or 'right', not {flavor!r}")
    return Connection(name, E, D.alg, f, act, flavor)


def one_sided_product(conn: Connection, x: Lin, y: Lin) -> Lin:
    out = Lin()
    for a, ca in x.items():
        for b, cb_ in y.items():
            out.iadd(conn.product(a, b), ca * cb_)
    return out


def coaction_rho(conn: Connection, e) -> Lin:
    """``rho = (1 (x) f) Delta_E``; keys are ``(E-basis, D-basis)``."""
    return extend_tensor([lambda x: Lin.term(x), conn.f], conn.coproduct(e))


def one_sided_antipode(conn: Connection, e, cache: dict | None = None) -> Lin:
    """Antipode solved on the side where ``1_E`` is an identity.

    Right flavor satisfies ``m(S (x) id)Delta = eta eps``; left flavor the
    mirrored ``m(id (x) S)Delta = eta eps``.
    """
    return antipode(conn, e, conn.identity_side, cache)


def connection_catalog() -> dict[str, Connection]:
    """Every connection on YSym or CSym among the compositions of base algebras.

    ``C o D`` and ``D o C`` for ``D`` in {YSym, CSym} and ``C`` any base
    algebra, with ``lam`` the canonical map ``C -> D``.
    """
    out: dict[str, Connection] = {}
    for dname, D in OPERADS.items():
        for cname in ("ssym", "ysym", "csym"):
            lam = BASE_MAPS[(cname, dname)]
            right = composition(cname, dname)  # root D, leaves C
            left = composition(dname, cname)  # root C, leaves D
            for E, flavor in ((right, "right"), (left, "left")):
                conn = make_connection(E, D, lam, flavor, name=f"{E.name}/{flavor}")
                out[conn.name] = conn
    return out
