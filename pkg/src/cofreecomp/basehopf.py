"""SSym, YSym and CSym in the fundamental basis, and the maps tau, kappa between them."""

from __future__ import annotations

from functools import lru_cache
from math import comb

from . import combinat as cb
from .exactalg import GradedConnectedHopf, Lin, extend


class SSym(GradedConnectedHopf):
    """Ordered trees (permutation words); the Malvenuto-Reutenauer algebra."""

    name = "ssym"
    unit = ()

    def degree(self, w):
        return len(w)

    def basis(self, n):
        return cb.permutations(n)

    def sort_key(self, w):
        return (len(w), w)

    @lru_cache(maxsize=None)
    def coproduct(self, w):
        out = Lin()
        for i in range(len(w) + 1):
            out.add_term(cb.split_word(w, [i], standardized=True), 1)
        return out

    @lru_cache(maxsize=None)
    def product(self, u, v):
        # split u at a multiset of len(v) gaps, graft onto v with v's labels on top
        out = Lin()
        for cuts in cb.multisets(len(u), len(v)):
            out.add_term(cb.graft_words(cb.split_word(u, cuts), v), 1)
        return out

    def fmt(self, w):
        return cb.format_word(w)

    def parse(self, text):
        return cb.parse_word(text)


class YSym(GradedConnectedHopf):
    """Planar binary trees; the Loday-Ronco algebra."""

    name = "ysym"
    unit = cb.LEAF

    def degree(self, t):
        return cb.degree(t)

    def basis(self, n):
        return cb.trees(n)

    def sort_key(self, t):
        return cb.tree_key(t)

    @lru_cache(maxsize=None)
    def coproduct(self, t):
        out = Lin()
        for i in range(cb.degree(t) + 1):
            out.add_term(cb.split_tree(t, i), 1)
        return out

    @lru_cache(maxsize=None)
    def product(self, s, t):
        out = Lin()
        for cuts in cb.multisets(cb.degree(s), cb.degree(t)):
            out.add_term(cb.graft_trees(cb.split_tree_multi(s, cuts), t), 1)
        return out

    def fmt(self, t):
        return cb.format_tree(t)

    def parse(self, text):
        return cb.parse_tree(text)


class CSym(GradedConnectedHopf):
    """Combs, indexed by degree; the divided power algebra."""

    name = "csym"
    unit = 0

    def degree(self, n):
        return n

    def basis(self, n):
        return (n,)

    def sort_key(self, n):
        return n

    @lru_cache(maxsize=None)
    def coproduct(self, n):
        return Lin(((i, n - i), 1) for i in range(n + 1))

    @lru_cache(maxsize=None)
    def product(self, m, n):
        return Lin.term(m + n, comb(m + n, n))

    def fmt(self, n):
        return cb.format_comb(n)

    def parse(self, text):
        return cb.parse_comb(text)


SSYM = SSym()
YSYM = YSym()
CSYM = CSym()

BASE_ALGEBRAS = {a.name: a for a in (SSYM, YSYM, CSYM)}


def base_product(alg: GradedConnectedHopf, u, v) -> Lin:
    return alg.product(u, v)


def base_coproduct(alg: GradedConnectedHopf, w) -> Lin:
    return alg.coproduct(w)


def csym_product_by_grafting(m: int, n: int) -> Lin:
    """CSym product through its tree definition: split c_m, graft onto c_n, comb."""
    out = Lin()
    base = cb.comb_tree(n)
    for cuts in cb.multisets(m, n):
        forest = cb.split_tree_multi(cb.comb_tree(m), cuts)
        out.add_term(cb.kappa(cb.graft_trees(forest, base)), 1)
    return out


def tau_basis(w) -> Lin:
    return Lin.term(cb.tau(w))


def kappa_basis(t) -> Lin:
    return Lin.term(cb.kappa(t))


def comb_basis(n: int) -> Lin:
    """CSym -> YSym, ``F_{c_n}`` to the comb tree; a coalgebra embedding."""
    return Lin.term(cb.comb_tree(n))


def tau_hat(x: Lin) -> Lin:
    return extend(tau_basis, x)


def kappa_hat(x: Lin) -> Lin:
    return extend(kappa_basis, x)


def divided_power_iso_check(n_max: int) -> bool:
    """CSym's structure constants against the divided power axioms up to degree ``n_max``."""
    a = CSYM
    if a.unit != 0 or a.counit(0) != 1:
        return False
    for n in range(n_max + 1):
        if a.coproduct(n) != Lin(((i, n - i), 1) for i in range(n + 1)):
            return False
        if n > 0 and a.counit(n) != 0:
            return False
        for m in range(n_max + 1 - n):
            if a.product(m, n) != Lin.term(m + n, comb(m + n, n)):
                return False
            if csym_product_by_grafting(m, n) != a.product(m, n):
                return False
    return True
