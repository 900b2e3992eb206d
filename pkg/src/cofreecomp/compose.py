"""The composition ``D o C`` of graded coalgebras.

A basis element is ``Composed(d, (c_0, ..., c_n))`` with ``d`` a ``D``-basis
element of degree ``n``: a forest of ``C``-objects sitting on the leaves of
``d``.  ``D`` is the root factor, ``C`` the leaf factor.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import factorial
from typing import Callable, Mapping, Sequence

from . import combinat as cb
from .basehopf import BASE_ALGEBRAS, CSYM, SSYM, YSYM, comb_basis, kappa_basis, tau_basis
from .combinat import Composed
from .exactalg import GradedCoalgebra, Lin, identity, lin_tensor, series_mul


class ComposedCoalgebra(GradedCoalgebra):
    def __init__(self, root: GradedCoalgebra, leaf: GradedCoalgebra, name: str | None = None):
        self.root = root
        self.leaf = leaf
        self.name = name or f"{leaf.name}.{root.name}"
        self.unit = Composed(root.unit, (leaf.unit,))
        self._basis: dict[int, tuple] = {}
        self._coproduct = lru_cache(maxsize=None)(self._compute_coproduct)

    def degree(self, e):
        return self.root.degree(e.outer) + sum(self.leaf.degree(c) for c in e.inner)

    def basis(self, n):
        if n not in self._basis:
            objs = cb.composed_objects(n, self.root.basis, self.leaf.basis, self.root.degree)
            self._basis[n] = tuple(sorted(objs, key=self.sort_key))
        return self._basis[n]

    def sort_key(self, e):
        return (self.degree(e), self.root.sort_key(e.outer), tuple(map(self.leaf.sort_key, e.inner)))

    def coproduct(self, e):
        return self._coproduct(e)

    def _compute_coproduct(self, e):
        d, inner = e
        if len(inner) != self.root.degree(d) + 1:
            raise ValueError(f"{e} has the wrong number of leaf objects")
        out = Lin()
        for (d1, d2), cd in self.root.coproduct(d).items():
            i = self.root.degree(d1)
            if self.root.degree(d2) != len(inner) - 1 - i:
                raise ValueError(f"coproduct of {self.root.name} is not graded at {d!r}")
            for (c1, c2), cc in self.leaf.coproduct(inner[i]).items():
                left = Composed(d1, inner[:i] + (c1,))
                right = Composed(d2, (c2,) + inner[i + 1:])
                out.add_term((left, right), cd * cc)
        return out

    def counit(self, e):
        return composed_counit(self, e)

    def fmt(self, e):
        return cb.format_composed(e, self.root.fmt, self.leaf.fmt)

    def parse(self, text):
        e = cb.parse_composed(text, self.root.parse, self.leaf.parse)
        if len(e.inner) != self.root.degree(e.outer) + 1:
            raise cb.ParseError(
                f"outer element has {self.root.degree(e.outer) + 1} leaves but "
                f"{len(e.inner)} leaf objects were given",
                text,
                0,
            )
        return e


def composed_coproduct(E: ComposedCoalgebra, e: Composed) -> Lin:
    return E.coproduct(e)


def composed_counit(E: ComposedCoalgebra, e: Composed) -> int:
    out = E.root.counit(e.outer)
    for c in e.inner:
        out *= E.leaf.counit(c)
    return out


def composed_morphism(
    leaf_map: Callable[[object], Lin], root_map: Callable[[object], Lin]
) -> Callable[[Composed], Lin]:
    """``(d; c_0..c_n) -> (root_map d; leaf_map c_0, ..., leaf_map c_n)``, multilinearly."""

    def f(e: Composed) -> Lin:
        out = Lin()
        for key, v in lin_tensor(root_map(e.outer), *map(leaf_map, e.inner)).items():
            out.add_term(Composed(key[0], key[1:]), v)
        return out

    return f


def primitive_spanning_set(
    E: ComposedCoalgebra,
    n: int,
    leaf_primitives: Mapping[int, Sequence[Lin]],
    root_primitives: Mapping[int, Sequence[Lin]],
) -> list[Lin]:
    """``(delta; 1, c_1, ..., c_{m-1}, 1)`` for root primitives ``delta`` of degree ``m``
    and ``(1; gamma)`` for leaf primitives ``gamma``, all of total degree ``n``."""
    if n < 1:
        return []
    one = E.leaf.unit
    out = []
    for m in range(1, n + 1):
        rest = n - m
        if m == 1 and rest:
            continue
        for delta in root_primitives.get(m, ()):
            for sizes in cb.weak_compositions(rest, m - 1):
                for middle in itertools.product(*(E.leaf.basis(s) for s in sizes)):
                    inner = (one, *middle, one)
                    out.append(Lin((Composed(d, inner), v) for d, v in delta.items()))
    for gamma in leaf_primitives.get(n, ()):
        out.append(Lin((Composed(E.root.unit, (c,)), v) for c, v in gamma.items()))
    return out


# ---------------------------------------------------------------------------
# dimension recursions


def dims_comb_recursion(leaf_dims: Sequence[int], n_max: int) -> list[int]:
    """Root factor with one comb per degree: ``E_n = C_n + sum_i C_i E_{n-i-1}``."""
    if leaf_dims[0] != 1:
        raise ValueError("leaf dimension series must start with 1")
    e = [1]
    for n in range(1, n_max + 1):
        e.append(leaf_dims[n] + sum(leaf_dims[i] * e[n - i - 1] for i in range(n)))
    return e


def dims_tree_recursion(leaf_dims: Sequence[int], n_max: int) -> list[int]:
    """Root factor indexed by binary trees: ``E_n = C_n + sum_i E_i E_{n-i-1}``."""
    if leaf_dims[0] != 1:
        raise ValueError("leaf dimension series must start with 1")
    e = [1]
    for n in range(1, n_max + 1):
        e.append(leaf_dims[n] + sum(e[i] * e[n - i - 1] for i in range(n)))
    return e


def dims_general(root_dims: Sequence[int], leaf_dims: Sequence[int], n_max: int) -> list[int]:
    """``E_n = sum_m D_m [t^(n-m)] C(t)^(m+1)``; valid for any root factor."""
    out = [0] * (n_max + 1)
    power = [1] + [0] * n_max
    for m in range(n_max + 1):
        power = series_mul(power, leaf_dims, n_max)
        for n in range(m, n_max + 1):
            out[n] += root_dims[m] * power[n - m]
    return out


def catalan(n: int) -> int:
    return factorial(2 * n) // (factorial(n) * factorial(n + 1))


BASE_DIMS = {
    "ssym": lambda n: factorial(n),
    "ysym": catalan,
    "csym": lambda n: 1,
}


def recursion_dims(root_name: str, leaf_name: str, n_max: int) -> list[int] | None:
    """Dimensions from the matching recursion, or ``None`` when neither applies."""
    leaf = [BASE_DIMS[leaf_name](n) for n in range(n_max + 1)]
    if root_name == "csym":
        return dims_comb_recursion(leaf, n_max)
    if root_name == "ysym":
        return dims_tree_recursion(leaf, n_max)
    return None


# ---------------------------------------------------------------------------
# the nine compositions and the morphisms between them

BASE_MAPS = {
    ("ssym", "ssym"): identity,
    ("ysym", "ysym"): identity,
    ("csym", "csym"): identity,
    ("ssym", "ysym"): tau_basis,
    ("ysym", "csym"): kappa_basis,
    ("ssym", "csym"): lambda w: kappa_basis(cb.tau(w)),
    ("csym", "ysym"): comb_basis,
}

ORDER = ("ssym", "ysym", "csym")


@lru_cache(maxsize=None)
def composition(leaf_name: str, root_name: str) -> ComposedCoalgebra:
    """``root o leaf``; named ``leaf.root`` (read "leaf over root")."""
    return ComposedCoalgebra(BASE_ALGEBRAS[root_name], BASE_ALGEBRAS[leaf_name])


def nine_compositions() -> dict[str, ComposedCoalgebra]:
    return {f"{a}.{b}": composition(a, b) for b in ORDER for a in ORDER}


def diagram_edges() -> list[tuple[str, str, Callable]]:
    """Every edge of the 3x3 diagram: one factor pushed one step down ssym -> ysym -> csym."""
    edges = []
    step = {"ssym": "ysym", "ysym": "csym"}
    for leaf in ORDER:
        for root in ORDER:
            if root in step:
                tgt = step[root]
                edges.append(
                    (f"{leaf}.{root}", f"{leaf}.{tgt}",
                     composed_morphism(identity, BASE_MAPS[(root, tgt)]))
                )
            if leaf in step:
                tgt = step[leaf]
                edges.append(
                    (f"{leaf}.{root}", f"{tgt}.{root}",
                     composed_morphism(BASE_MAPS[(leaf, tgt)], identity))
                )
    return edges


__all__ = [
    "ComposedCoalgebra",
    "Composed",
    "composed_coproduct",
    "composed_counit",
    "composed_morphism",
    "primitive_spanning_set",
    "dims_comb_recursion",
    "dims_tree_recursion",
    "dims_general",
    "recursion_dims",
    "composition",
    "nine_compositions",
    "diagram_edges",
    "catalan",
    "CSYM",
    "SSYM",
    "YSYM",
]
