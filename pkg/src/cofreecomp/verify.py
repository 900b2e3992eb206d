"""Exhaustive axiom checks at desk scale.

Every check walks all basis inputs up to a degree cap, compares two exact
combinations, and stops at the first mismatch, which it records in canonical
text syntax.  Nothing is sampled and nothing has a tolerance.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Iterable, Sequence

from . import combinat as cb
from .basehopf import BASE_ALGEBRAS, CSYM, SSYM, YSYM
from .compose import (
    BASE_DIMS,
    ComposedCoalgebra,
    composition,
    diagram_edges,
    dims_general,
    nine_compositions,
    primitive_spanning_set,
    recursion_dims,
)
from .exactalg import (
    Lin,
    antipode,
    convolution_check,
    extend,
    extend_tensor,
    format_lin,
    lin_tensor,
    primitive_basis,
    primitive_dimension,
    product_lin,
    rank,
    reduced_coproduct,
    series_inverse_one_minus,
    tensor_product,
)
from .named import (
    CC,
    DELTASYM,
    cc_left,
    cc_right,
    cksym,
    deltasym,
    deltasym_coproduct_native,
    deltasym_coproduct_transported,
    psym,
)
from .operadic import OPERADS, Connection, HopfOperad, connection_catalog, operad_product

MAX_BASIS = 20000


class CapExceeded(RuntimeError):
    pass


@dataclass
class CheckReport:
    name: str
    algebra: str
    degree_cap: int
    status: str  # pass | fail | skipped
    checked: int = 0
    detail: str = ""
    counterexample: dict | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return asdict(self)

    def line(self) -> str:
        s = f"{self.status.upper():7} {self.name:22} {self.algebra:18} deg<={self.degree_cap}  ({self.checked} cases)"
        if self.detail:
            s += f"  {self.detail}"
        if self.counterexample:
            s += "\n        counterexample: " + json.dumps(self.counterexample, ensure_ascii=False)
        return s


class _Mismatch(Exception):
    def __init__(self, info: dict):
        self.info = info


def _lin_text(x: Lin, legs: Sequence[Any]) -> str:
    if len(legs) == 1:
        alg = legs[0]
        return format_lin(x, alg.fmt, lambda b: alg.sort_key(b))
    return format_lin(
        x,
        lambda k: " ⊗ ".join(a.fmt(b) for a, b in zip(legs, k)),
        lambda k: tuple(a.sort_key(b) for a, b in zip(legs, k)),
    )


def _expect(lhs: Lin, rhs: Lin, legs: Sequence[Any], law: str, inputs: Iterable[str]) -> None:
    if lhs != rhs:
        raise _Mismatch(
            {
                "law": law,
                "input": list(inputs),
                "lhs": _lin_text(lhs, legs),
                "rhs": _lin_text(rhs, legs),
            }
        )


def _basis_upto(alg: Any, n_max: int, n_min: int = 0) -> list:
    out = []
    for n in range(n_min, n_max + 1):
        b = alg.basis(n)
        if len(b) > MAX_BASIS:
            raise CapExceeded(f"{alg.name} degree {n} has {len(b)} basis elements")
        out.extend(b)
    return out


def _pairs(alg_a: Any, alg_b: Any, total: int, min_a: int = 0, min_b: int = 0) -> Iterable[tuple]:
    for n in range(total + 1):
        for i in range(min_a, n + 1 - min_b):
            for a in alg_a.basis(i):
                for b in alg_b.basis(n - i):
                    yield a, b


def _run(name: str, alg_name: str, cap: int, body: Callable[[], tuple[int, str]]) -> CheckReport:
    try:
        checked, detail = body()
    except _Mismatch as m:
        return CheckReport(name, alg_name, cap, "fail", counterexample=m.info)
    except CapExceeded as exc:
        return CheckReport(name, alg_name, cap, "skipped", detail=str(exc))
    return CheckReport(name, alg_name, cap, "pass", checked=checked, detail=detail)


def _id(b: Any) -> Lin:
    return Lin.term(b)


# ---------------------------------------------------------------------------
# coalgebra laws


def check_coalgebra(alg: Any, n_max: int) -> CheckReport:
    """Coassociativity, both counit laws, and grading of the coproduct."""

    def body():
        count = 0
        for b in _basis_upto(alg, n_max):
            d = alg.coproduct(b)
            n = alg.degree(b)
            for (x, y) in d:
                if alg.degree(x) + alg.degree(y) != n:
                    raise _Mismatch({"law": "graded coproduct", "input": [alg.fmt(b)],
                                     "lhs": _lin_text(d, [alg, alg]), "rhs": f"degree {n}"})
            left = extend_tensor([alg.coproduct, _id], d)
            left = Lin(((k[0][0], k[0][1], k[1]), v) for k, v in left.items())
            right = extend_tensor([_id, alg.coproduct], d)
            right = Lin(((k[0], k[1][0], k[1][1]), v) for k, v in right.items())
            _expect(left, right, [alg] * 3, "coassociativity", [alg.fmt(b)])
            lc, rc = Lin(), Lin()
            for (x, y), v in d.items():
                lc.add_term(y, alg.counit(x) * v)
                rc.add_term(x, alg.counit(y) * v)
            _expect(lc, Lin.term(b), [alg], "left counit", [alg.fmt(b)])
            _expect(rc, Lin.term(b), [alg], "right counit", [alg.fmt(b)])
            count += 1
        if len(alg.basis(0)) != 1:
            raise _Mismatch({"law": "connected", "input": [], "lhs": str(len(alg.basis(0))), "rhs": "1"})
        return count, ""

    return _run("coalgebra", alg.name, n_max, body)


# ---------------------------------------------------------------------------
# algebra laws


def check_bialgebra(alg: Any, n_max: int) -> CheckReport:
    """``Delta(a.b) = Delta(a).Delta(b)``, ``eps(a.b) = eps(a)eps(b)``, grading of the product."""

    def body():
        count = 0
        for a, b in _pairs(alg, alg, n_max):
            p = alg.product(a, b)
            n = alg.degree(a) + alg.degree(b)
            if any(alg.degree(k) != n for k in p):
                raise _Mismatch({"law": "graded product", "input": [alg.fmt(a), alg.fmt(b)],
                                 "lhs": _lin_text(p, [alg]), "rhs": f"degree {n}"})
            lhs = extend(alg.coproduct, p)
            rhs = tensor_product([alg, alg], alg.coproduct(a), alg.coproduct(b))
            _expect(lhs, rhs, [alg, alg], "coproduct multiplicative", [alg.fmt(a), alg.fmt(b)])
            eps = sum(alg.counit(k) * v for k, v in p.items())
            if eps != alg.counit(a) * alg.counit(b):
                raise _Mismatch({"law": "counit multiplicative", "input": [alg.fmt(a), alg.fmt(b)],
                                 "lhs": str(eps), "rhs": str(alg.counit(a) * alg.counit(b))})
            count += 1
        return count, ""

    return _run("bialgebra", alg.name, n_max, body)


def check_associative(alg: Any, n_max: int) -> CheckReport:
    def body():
        count = 0
        for n in range(n_max + 1):
            for i, j in itertools.product(range(n + 1), repeat=2):
                k = n - i - j
                if k < 0:
                    continue
                for a in alg.basis(i):
                    for b in alg.basis(j):
                        ab = alg.product(a, b)
                        for c in alg.basis(k):
                            lhs = product_lin(alg, ab, Lin.term(c))
                            rhs = product_lin(alg, Lin.term(a), alg.product(b, c))
                            _expect(lhs, rhs, [alg], "associativity",
                                    [alg.fmt(a), alg.fmt(b), alg.fmt(c)])
                            count += 1
        return count, ""

    return _run("associative", alg.name, n_max, body)


def check_one_sided_unit(conn: Any, n_max: int) -> CheckReport:
    """Identity on the declared side; a recorded failure on the other side.

    Two-sided algebras (no ``identity_side``) must be identities on both sides.
    """
    side = getattr(conn, "identity_side", None)

    def body():
        one = conn.unit
        witness = None
        count = 0
        for e in _basis_upto(conn, n_max):
            right, left = conn.product(e, one), conn.product(one, e)
            if side in (None, "right"):
                _expect(right, Lin.term(e), [conn], "right unit", [conn.fmt(e)])
            if side in (None, "left"):
                _expect(left, Lin.term(e), [conn], "left unit", [conn.fmt(e)])
            other = left if side == "right" else right
            if side and witness is None and other != Lin.term(e):
                witness = {
                    "element": conn.fmt(e),
                    "side": "left" if side == "right" else "right",
                    "product": _lin_text(other, [conn]),
                }
            count += 1
        if side is None:
            return count, "two-sided unit"
        if witness is None:
            raise _Mismatch({"law": "one-sidedness witness", "input": [],
                             "lhs": "unit acts as identity on both sides", "rhs": "a violation"})
        return count, f"{side} identity; other side fails at {witness['element']} -> {witness['product']}"

    return _run("one_sided_unit", conn.name, n_max, body)


def check_antipode(alg: Any, n_max: int) -> CheckReport:
    """``m(S (x) id)Delta = eta eps`` on the identity side (mirrored for left flavors)."""
    sides = [getattr(alg, "identity_side", None) or "right"]
    if not isinstance(alg, Connection):
        sides = ["right", "left"]

    def body():
        count = 0
        for side in sides:
            cache: dict = {}
            s = lambda b: antipode(alg, b, side, cache)  # noqa: E731
            for b in _basis_upto(alg, n_max):
                resid = convolution_check(alg, b, s, side)
                law = "m(S⊗id)Δ = ηε" if side == "right" else "m(id⊗S)Δ = ηε"
                _expect(resid, Lin(), [alg], law, [alg.fmt(b)])
                count += 1
        laws = ["m(S⊗id)Δ=ηε" if s == "right" else "m(id⊗S)Δ=ηε" for s in sides]
        return count, ", ".join(laws)

    return _run("antipode", alg.name, n_max, body)


# ---------------------------------------------------------------------------
# connections and Hopf modules


def _star_lin(conn: Connection, x: Lin, y: Lin) -> Lin:
    return conn.star_lin(x, y)


def check_connection(conn: Connection, n_max: int) -> CheckReport:
    """``f`` is a coalgebra map and a module map; the action is associative,
    unital and commutes with coproducts."""
    D = conn.target

    def body():
        count = 0
        right = conn.flavor == "right"
        if conn.f(conn.unit) != Lin.term(D.unit):
            raise _Mismatch({"law": "f(1_E) = 1_D", "input": [conn.fmt(conn.unit)],
                             "lhs": _lin_text(conn.f(conn.unit), [D]), "rhs": D.fmt(D.unit)})
        for e in _basis_upto(conn, n_max):
            fe = conn.f(e)
            if any(D.degree(k) != conn.degree(e) for k in fe):
                raise _Mismatch({"law": "f preserves degree", "input": [conn.fmt(e)],
                                 "lhs": _lin_text(fe, [D]), "rhs": f"degree {conn.degree(e)}"})
            lhs = extend_tensor([conn.f, conn.f], conn.coproduct(e))
            rhs = extend(D.coproduct, fe)
            _expect(lhs, rhs, [D, D], "(f⊗f)Δ = Δf", [conn.fmt(e)])
            count += 1
        for e, d in _pairs(conn, D, n_max):
            ed = conn.star(e, d) if right else conn.star(d, e)
            inputs = [conn.fmt(e), D.fmt(d)]
            # module map
            lhs = conn.f_lin(ed)
            rhs = product_lin(D, conn.f(e), Lin.term(d)) if right else product_lin(D, Lin.term(d), conn.f(e))
            _expect(lhs, rhs, [D], "f(e⋆d) = f(e)d" if right else "f(d⋆e) = d f(e)", inputs)
            # module coalgebra
            lhs = extend(conn.coproduct, ed)
            rhs = Lin()
            for (e1, e2), ce in conn.coproduct(e).items():
                for (d1, d2), cd in D.coproduct(d).items():
                    if right:
                        rhs.iadd(lin_tensor(conn.star(e1, d1), conn.star(e2, d2)), ce * cd)
                    else:
                        rhs.iadd(lin_tensor(conn.star(d1, e1), conn.star(d2, e2)), ce * cd)
            _expect(lhs, rhs, [conn, conn], "Δ(e⋆d) = Δ(e)⋆Δ(d)", inputs)
            count += 1
        # unital and associative action
        for e in _basis_upto(conn, n_max):
            act = conn.star(e, D.unit) if right else conn.star(D.unit, e)
            _expect(act, Lin.term(e), [conn], "1_D acts trivially", [conn.fmt(e)])
        for n in range(n_max + 1):
            for i in range(n + 1):
                for j in range(n + 1 - i):
                    for e in conn.basis(n - i - j):
                        for d1 in D.basis(i):
                            for d2 in D.basis(j):
                                inputs = [conn.fmt(e), D.fmt(d1), D.fmt(d2)]
                                if right:
                                    lhs = _star_lin(conn, conn.star(e, d1), Lin.term(d2))
                                    rhs = _star_lin(conn, Lin.term(e), D.product(d1, d2))
                                    law = "(e⋆d)⋆d' = e⋆(dd')"
                                else:
                                    lhs = _star_lin(conn, Lin.term(d1), conn.star(d2, e))
                                    rhs = _star_lin(conn, D.product(d1, d2), Lin.term(e))
                                    law = "d⋆(d'⋆e) = (dd')⋆e"
                                _expect(lhs, rhs, [conn], law, inputs)
                                count += 1
        return count, f"{conn.flavor} {D.name}-module"

    return _run("connection", conn.name, n_max, body)


def check_hopf_module(conn: Connection, n_max: int) -> CheckReport:
    """The coaction ``rho = (1 (x) f)Delta``: coassociative, counital, compatible
    with the action, and multiplicative."""
    D = conn.target
    right = conn.flavor == "right"

    def body():
        count = 0
        for e in _basis_upto(conn, n_max):
            r = conn.rho(e)
            lhs = extend_tensor([conn.rho, _id], r)
            lhs = Lin(((k[0][0], k[0][1], k[1]), v) for k, v in lhs.items())
            rhs = extend_tensor([_id, D.coproduct], r)
            rhs = Lin(((k[0], k[1][0], k[1][1]), v) for k, v in rhs.items())
            _expect(lhs, rhs, [conn, D, D], "(ρ⊗id)ρ = (id⊗Δ)ρ", [conn.fmt(e)])
            counit = Lin()
            for (x, d), v in r.items():
                counit.add_term(x, D.counit(d) * v)
            _expect(counit, Lin.term(e), [conn], "(id⊗ε)ρ = id", [conn.fmt(e)])
            count += 1
        for e, d in _pairs(conn, D, n_max):
            ed = conn.star(e, d) if right else conn.star(d, e)
            lhs = extend(conn.rho, ed)
            rhs = Lin()
            for (e1, e2), ce in conn.coproduct(e).items():
                for (d1, d2), cd in D.coproduct(d).items():
                    if right:
                        left_leg = conn.star(e1, d1)
                        right_leg = product_lin(D, conn.f(e2), Lin.term(d2))
                    else:
                        left_leg = conn.star(d1, e1)
                        right_leg = product_lin(D, Lin.term(d2), conn.f(e2))
                    rhs.iadd(lin_tensor(left_leg, right_leg), ce * cd)
            _expect(lhs, rhs, [conn, D], "ρ(e⋆d) = ρ(e)⋆Δ(d)", [conn.fmt(e), D.fmt(d)])
            count += 1
        for a, b in _pairs(conn, conn, n_max):
            lhs = extend(conn.rho, conn.product(a, b))
            rhs = tensor_product([conn, D], conn.rho(a), conn.rho(b))
            _expect(lhs, rhs, [conn, D], "ρ(e·e') = ρ(e)ρ(e')", [conn.fmt(a), conn.fmt(b)])
            count += 1
        return count, ""

    return _run("hopf_module", conn.name, n_max, body)


# ---------------------------------------------------------------------------
# operads


def check_operad(D: HopfOperad, n_max: int) -> CheckReport:
    """Unit and associativity of ``gamma``, and ``Delta gamma = (gamma (x) gamma) Delta_{DoD}``."""
    alg = D.alg
    DD = ComposedCoalgebra(alg, alg, name=f"{alg.name}.{alg.name}")

    def gamma_lin(x: Lin) -> Lin:
        out = Lin()
        for a, v in x.items():
            out.add_term(D.compose(a.outer, a.inner), v)
        return out

    def body():
        count = 0
        one = alg.unit
        for d in _basis_upto(alg, n_max):
            if D.compose(d, (one,) * (alg.degree(d) + 1)) != d or D.compose(one, (d,)) != d:
                raise _Mismatch({"law": "operad unit", "input": [alg.fmt(d)], "lhs": "", "rhs": alg.fmt(d)})
        for a in _basis_upto(DD, n_max):
            g = D.compose(a.outer, a.inner)
            lhs = alg.coproduct(g)
            rhs = extend_tensor([lambda x: gamma_lin(Lin.term(x))] * 2, DD.coproduct(a))
            _expect(lhs, rhs, [alg, alg], "Δγ = (γ⊗γ)Δ", [DD.fmt(a)])
            # associativity: graft a third layer over the leaves of gamma(a)
            n_top = n_max - DD.degree(a)
            leaves = alg.degree(g) + 1
            for k in range(n_top + 1):
                for sizes in cb.weak_compositions(k, leaves):
                    for top in itertools.product(*(alg.basis(s) for s in sizes)):
                        lhs1 = D.compose(g, top)
                        pieces, pos = [], 0
                        for c in a.inner:
                            w = alg.degree(c) + 1
                            pieces.append(D.compose(c, top[pos:pos + w]))
                            pos += w
                        rhs1 = D.compose(a.outer, tuple(pieces))
                        if lhs1 != rhs1:
                            raise _Mismatch({"law": "γ associativity",
                                             "input": [DD.fmt(a), " ".join(map(alg.fmt, top))],
                                             "lhs": alg.fmt(lhs1), "rhs": alg.fmt(rhs1)})
                        count += 1
        return count, ""

    return _run("operad", D.name, n_max, body)


def check_operad_product(D: HopfOperad, n_max: int) -> CheckReport:
    """The product induced by ``gamma`` equals the algebra's own product."""
    alg = D.alg

    def body():
        count = 0
        for a, b in _pairs(alg, alg, n_max):
            _expect(operad_product(D, a, b), alg.product(a, b), [alg],
                    "γ(b; Δ⁽ⁿ⁾a) = a·b", [alg.fmt(a), alg.fmt(b)])
            count += 1
        return count, ""

    return _run("operad_product", D.name, n_max, body)


# ---------------------------------------------------------------------------
# cofreeness and dimensions


def check_cofreeness(alg: Any, n_max: int) -> CheckReport:
    """Dimension series equals ``1/(1 - P(t))`` for the computed primitive series ``P``."""

    def body():
        _basis_upto(alg, n_max)
        dims = alg.dims(n_max)
        prims = [0] + [primitive_dimension(alg, n) for n in range(1, n_max + 1)]
        expected = series_inverse_one_minus(prims, n_max)
        if expected != dims:
            raise _Mismatch({"law": "dims = 1/(1-P)", "input": [],
                             "lhs": str(dims), "rhs": str(expected)})
        return n_max, f"dims {dims} primitives {prims[1:]}"

    return _run("cofreeness", alg.name, n_max, body)


def check_primitive_span(E: ComposedCoalgebra, n_max: int) -> CheckReport:
    """Spanning vectors from root/leaf primitives lie in the kernel and reach full rank."""

    def body():
        _basis_upto(E, n_max)
        pc = {k: primitive_basis(E.leaf, k) for k in range(1, n_max + 1)}
        pd = {k: primitive_basis(E.root, k) for k in range(1, n_max + 1)}
        ranks = []
        count = 0
        for n in range(1, n_max + 1):
            vecs = primitive_spanning_set(E, n, pc, pd)
            for v in vecs:
                red = Lin()
                for b, c in v.items():
                    red.iadd(reduced_coproduct(E, b), c)
                _expect(red, Lin(), [E, E], "spanning vector is primitive", [_lin_text(v, [E])])
                count += 1
            r = rank(vecs)
            p = primitive_dimension(E, n)
            if r != p:
                raise _Mismatch({"law": "span has full rank", "input": [f"degree {n}"],
                                 "lhs": str(r), "rhs": str(p)})
            ranks.append(r)
        return count, f"primitive dims {ranks}"

    return _run("primitive_span", E.name, n_max, body)


NAMED_SEQUENCES = {
    "csym.csym": lambda n: 2 ** n,
    "ysym.csym": [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786][1:],
    "ssym.csym": [1, 2, 5, 15, 54, 235],
    "ssym.ysym": [1, 2, 6, 22, 92, 428],
    "ysym.ysym": [1, 2, 6, 21, 80],
    "csym.ysym": [1, 2, 5, 15, 51],
}


def check_dims(alg: Any, n_max: int) -> CheckReport:
    """Enumeration against the general convolution formula, the matching
    recursion, and the known sequence where one is recorded."""

    def body():
        _basis_upto(alg, n_max)
        dims = alg.dims(n_max)
        name = alg.name
        if name == "cc":
            name = "csym.csym"
        sources = []
        if name == "deltasym":
            sources.append(("2^n", [2 ** n for n in range(n_max + 1)]))
        elif "." in name:
            leaf, root = name.split(".")
            ld = [BASE_DIMS[leaf](n) for n in range(n_max + 1)]
            rd = [BASE_DIMS[root](n) for n in range(n_max + 1)]
            sources.append(("convolution", dims_general(rd, ld, n_max)))
            rec = recursion_dims(root, leaf, n_max)
            if rec is not None:
                sources.append(("recursion", rec))
        elif name in BASE_DIMS:
            sources.append(("closed form", [BASE_DIMS[name](n) for n in range(n_max + 1)]))
        known = NAMED_SEQUENCES.get(name)
        if callable(known):
            sources.append(("sequence", [known(n) for n in range(n_max + 1)]))
        elif known is not None:
            m = min(len(known), n_max + 1)
            sources.append(("sequence", known[:m]))
        for label, seq in sources:
            if dims[: len(seq)] != seq:
                raise _Mismatch({"law": f"enumeration = {label}", "input": [],
                                 "lhs": str(dims[: len(seq)]), "rhs": str(seq)})
        return n_max + 1, ",".join(map(str, dims))

    return _run("dims", alg.name, n_max, body)


def check_diagram(n_max: int) -> CheckReport:
    """Every edge of the 3x3 diagram is a coalgebra map and all paths agree."""
    comps = nine_compositions()
    edges = diagram_edges()

    def body():
        count = 0
        for src, tgt, f in edges:
            S, T = comps[src], comps[tgt]
            for e in _basis_upto(S, n_max):
                fe = f(e)
                if any(T.degree(k) != S.degree(e) for k in fe):
                    raise _Mismatch({"law": "degree preserving", "input": [src, S.fmt(e)],
                                     "lhs": _lin_text(fe, [T]), "rhs": ""})
                lhs = extend_tensor([f, f], S.coproduct(e))
                rhs = extend(T.coproduct, fe)
                _expect(lhs, rhs, [T, T], f"{src} -> {tgt} coalgebra map", [S.fmt(e)])
                eps = sum(T.counit(k) * v for k, v in fe.items())
                if eps != S.counit(e):
                    raise _Mismatch({"law": "counit preserved", "input": [S.fmt(e)],
                                     "lhs": str(eps), "rhs": str(S.counit(e))})
                count += 1
        # all monotone paths from the top to the bottom of the grid agree
        emap = {(s, t): f for s, t, f in edges}
        start, end = "ssym.ssym", "csym.csym"

        def paths(node):
            if node == end:
                yield []
                return
            for (s, t) in emap:
                if s == node:
                    for rest in paths(t):
                        yield [(s, t)] + rest

        all_paths = list(paths(start))
        S, T = comps[start], comps[end]
        for e in _basis_upto(S, n_max):
            images = []
            for path in all_paths:
                x = Lin.term(e)
                for key in path:
                    x = extend(emap[key], x)
                images.append(x)
            for p, img in zip(all_paths[1:], images[1:]):
                _expect(img, images[0], [T], "diagram commutes",
                        [S.fmt(e), " -> ".join(t for _, t in p)])
            count += 1
        # each small square separately
        for s, t1 in emap:
            for t1b, t2 in emap:
                if t1b != t1:
                    continue
                for s2, m in emap:
                    if s2 != s or m == t1 or (m, t2) not in emap:
                        continue
                    for e in _basis_upto(comps[s], n_max):
                        a = extend(emap[(t1, t2)], emap[(s, t1)](e))
                        b = extend(emap[(m, t2)], emap[(s, m)](e))
                        _expect(a, b, [comps[t2]], f"square {s} -> {t2}", [comps[s].fmt(e)])
                        count += 1
        return count, f"{len(edges)} edges, {len(all_paths)} paths"

    return _run("diagram", "nine compositions", n_max, body)


def check_transport(n_max: int) -> CheckReport:
    """Native simplex-face coproduct agrees with the one carried through phi."""

    def body():
        count = 0
        for s in _basis_upto(DELTASYM, n_max):
            _expect(deltasym_coproduct_native(s), deltasym_coproduct_transported(s),
                    [DELTASYM, DELTASYM], "native Δ = φ⁻¹Δφ", [DELTASYM.fmt(s)])
            c = cb.phi(s)
            if cb.phi_inv(c) != s:
                raise _Mismatch({"law": "phi_inv o phi", "input": [DELTASYM.fmt(s)], "lhs": str(c), "rhs": ""})
            count += 1
        return count, ""

    return _run("transport", "deltasym", n_max, body)


# ---------------------------------------------------------------------------
# suites


def instances() -> dict[str, Connection]:
    return {
        "psym": psym(),
        "cksym": cksym(),
        "cc/right": cc_right(),
        "cc/left": cc_left(),
        "deltasym": deltasym("swap"),
    }


def default_suite(max_degree: int | None = None, include_catalog: bool = True) -> list[tuple[str, Callable[[], CheckReport]]]:
    """Named jobs; ``max_degree`` lowers every cap (never raises one)."""

    def cap(n: int) -> int:
        return n if max_degree is None else min(n, max_degree)

    jobs: list[tuple[str, Callable[[], CheckReport]]] = []

    def add(label, fn, *args):
        jobs.append((label, lambda: fn(*args)))

    for name, alg in BASE_ALGEBRAS.items():
        c = cap(4 if name == "ssym" else 5)
        add(f"coalgebra {name}", check_coalgebra, alg, c)
        add(f"bialgebra {name}", check_bialgebra, alg, c)
        add(f"associative {name}", check_associative, alg, c)
        add(f"unit {name}", check_one_sided_unit, alg, c)
        add(f"antipode {name}", check_antipode, alg, c)
        add(f"cofreeness {name}", check_cofreeness, alg, c)
        add(f"dims {name}", check_dims, alg, cap(7))
    for name, E in nine_compositions().items():
        has_s = "ssym" in name
        add(f"coalgebra {name}", check_coalgebra, E, cap(4 if has_s else 5))
        add(f"dims {name}", check_dims, E, cap(5 if has_s else 7))
        add(f"cofreeness {name}", check_cofreeness, E, cap(5))
        add(f"primitive_span {name}", check_primitive_span, E, cap(5))
    add("dims cc", check_dims, CC, cap(10))
    add("dims deltasym", check_dims, DELTASYM, cap(10))
    add("coalgebra cc", check_coalgebra, CC, cap(5))
    add("coalgebra deltasym", check_coalgebra, DELTASYM, cap(5))
    add("cofreeness cc", check_cofreeness, CC, cap(8))
    add("cofreeness deltasym", check_cofreeness, DELTASYM, cap(8))
    add("transport deltasym", check_transport, cap(8))
    for name, conn in instances().items():
        c = cap(4)
        add(f"bialgebra {name}", check_bialgebra, conn, c)
        add(f"associative {name}", check_associative, conn, c)
        add(f"unit {name}", check_one_sided_unit, conn, c)
        add(f"antipode {name}", check_antipode, conn, c)
        add(f"connection {name}", check_connection, conn, c)
        add(f"hopf_module {name}", check_hopf_module, conn, c)
    for name, D in OPERADS.items():
        add(f"operad {name}", check_operad, D, cap(4))
        add(f"operad_product {name}", check_operad_product, D, cap(5))
    add("diagram", check_diagram, cap(4))
    if include_catalog:
        for name, conn in connection_catalog().items():
            c = cap(3)
            add(f"connection {name}", check_connection, conn, c)
            add(f"bialgebra {name}", check_bialgebra, conn, c)
            add(f"unit {name}", check_one_sided_unit, conn, c)
            add(f"antipode {name}", check_antipode, conn, c)
            add(f"hopf_module {name}", check_hopf_module, conn, c)
    return jobs


def run_suite(max_degree: int | None = None, include_catalog: bool = True,
              progress: Callable[[CheckReport], None] | None = None) -> list[CheckReport]:
    reports = []
    for _, job in default_suite(max_degree, include_catalog):
        r = job()
        reports.append(r)
        if progress:
            progress(r)
    return reports


def reports_json(reports: Sequence[CheckReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, ensure_ascii=False)
