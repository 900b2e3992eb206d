"""Exact linear algebra over formal sums of basis objects.

Coefficients are Python ints or :class:`fractions.Fraction`; both are exact and
compare equal across types, so integer structure constants never get promoted
unless a division happens.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence


class Lin(dict):
    """Finite formal sum ``{basis object: nonzero coefficient}``.

    Keys of tensor combinations are tuples of basis objects.
    """

    __slots__ = ()

    def __init__(self, data: Any = ()):
        super().__init__()
        items = data.items() if isinstance(data, dict) else data
        for k, v in items:
            self.add_term(k, v)

    @classmethod
    def term(cls, key: Any, coeff: Any = 1) -> "Lin":
        out = cls()
        out.add_term(key, coeff)
        return out

    def add_term(self, key: Any, coeff: Any) -> None:
        if not coeff:
            return
        v = self.get(key, 0) + coeff
        if v:
            if isinstance(v, Fraction) and v.denominator == 1:
                v = v.numerator
            dict.__setitem__(self, key, v)
        else:
            del self[key]

    def iadd(self, other: "Lin", scale: Any = 1) -> "Lin":
        for k, v in other.items():
            self.add_term(k, scale * v)
        return self

    def __add__(self, other: "Lin") -> "Lin":
        return Lin(self).iadd(other)

    def __sub__(self, other: "Lin") -> "Lin":
        return Lin(self).iadd(other, -1)

    def __neg__(self) -> "Lin":
        return Lin({k: -v for k, v in self.items()})

    def __mul__(self, scalar: Any) -> "Lin":
        if isinstance(scalar, Lin):
            return NotImplemented
        return Lin({k: scalar * v for k, v in self.items()})

    __rmul__ = __mul__

    def coefficient_sum(self) -> Any:
        return sum(self.values(), 0)

    def __repr__(self) -> str:
        return f"Lin({dict.__repr__(self)})"


ZERO = Lin()


def lin_add(x: Lin, y: Lin) -> Lin:
    return x + y


def lin_scale(c: Any, x: Lin) -> Lin:
    return x * c


def lin_tensor(*xs: Lin) -> Lin:
    """Multilinear tensor product; keys become tuples."""
    out = Lin()
    for combo in itertools.product(*(x.items() for x in xs)):
        coeff = 1
        for _, v in combo:
            coeff *= v
        out.add_term(tuple(k for k, _ in combo), coeff)
    return out


def extend(f: Callable[[Any], Lin], x: Lin) -> Lin:
    """Linear extension of a basis map."""
    out = Lin()
    for k, v in x.items():
        out.iadd(f(k), v)
    return out


def extend_tensor(fs: Sequence[Callable[[Any], Lin]], x: Lin) -> Lin:
    """Apply ``f_0 (x) f_1 (x) ...`` to a tensor combination."""
    out = Lin()
    for key, v in x.items():
        out.iadd(lin_tensor(*(f(b) for f, b in zip(fs, key))), v)
    return out


def identity(b: Any) -> Lin:
    return Lin.term(b)


# ---------------------------------------------------------------------------
# algebra interfaces


class GradedCoalgebra:
    """Graded coalgebra with a distinguished basis.

    Subclasses supply ``degree``, ``basis``, ``coproduct``, ``fmt``, ``parse``
    and ``sort_key``; the counit defaults to projection onto degree 0.
    """

    name = "coalgebra"
    unit: Any = None

    def degree(self, b: Any) -> int:
        raise NotImplementedError

    def basis(self, n: int) -> Sequence:
        raise NotImplementedError

    def coproduct(self, b: Any) -> Lin:
        raise NotImplementedError

    def counit(self, b: Any) -> int:
        return 1 if self.degree(b) == 0 else 0

    def sort_key(self, b: Any) -> Any:
        return b

    def fmt(self, b: Any) -> str:
        return str(b)

    def parse(self, text: str) -> Any:
        raise NotImplementedError

    def dims(self, n_max: int) -> list[int]:
        return [len(self.basis(n)) for n in range(n_max + 1)]

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name}>"


class GradedConnectedHopf(GradedCoalgebra):
    """Adds ``product``; ``unit`` is the degree-0 basis element."""

    def product(self, a: Any, b: Any) -> Lin:
        raise NotImplementedError


def coproduct_lin(alg: GradedCoalgebra, x: Lin) -> Lin:
    return extend(alg.coproduct, x)


def product_lin(alg: Any, x: Lin, y: Lin) -> Lin:
    out = Lin()
    for a, ca in x.items():
        for b, cb in y.items():
            out.iadd(alg.product(a, b), ca * cb)
    return out


def tensor_product(algs: Sequence[Any], x: Lin, y: Lin) -> Lin:
    """Componentwise product on tensor legs: ``(a1 (x) a2)(b1 (x) b2)``."""
    out = Lin()
    for ka, ca in x.items():
        for kb, cb in y.items():
            legs = [alg.product(a, b) for alg, a, b in zip(algs, ka, kb)]
            out.iadd(lin_tensor(*legs), ca * cb)
    return out


def iterated_coproduct(alg: GradedCoalgebra, b: Any, k: int) -> Lin:
    """``Delta^(k)``: ``k`` = 0 is the identity, result keys are ``(k+1)``-tuples.

    Built as ``(Delta (x) id^(k-1)) o Delta^(k-1)``.
    """
    cur = Lin.term((b,))
    for _ in range(k):
        nxt = Lin()
        for key, v in cur.items():
            for (x, y), w in alg.coproduct(key[0]).items():
                nxt.add_term((x, y) + key[1:], v * w)
        cur = nxt
    return cur


def reduced_coproduct(alg: GradedCoalgebra, b: Any) -> Lin:
    """``Delta(b) - b (x) 1 - 1 (x) b``."""
    if alg.degree(b) == 0:
        raise ValueError("reduced coproduct is defined on positive degrees only")
    out = Lin(alg.coproduct(b))
    out.add_term((b, alg.unit), -1)
    out.add_term((alg.unit, b), -1)
    return out


# ---------------------------------------------------------------------------
# exact elimination


class Eliminator:
    """Incremental exact echelon reduction of sparse vectors.

    Vectors are dicts ``{coordinate: coefficient}``; coordinates get integer
    ids in order of first appearance and each pivot is the largest id of its
    vector.  Every dependent input is recorded in ``kernel`` as the
    combination of input labels summing to zero.
    """

    def __init__(self) -> None:
        self.ids: dict[Any, int] = {}
        self.pivots: dict[int, tuple[dict, dict]] = {}
        self.kernel: list[dict] = []
        self.count = 0

    def _index(self, vec: dict) -> dict:
        out = {}
        for k, c in vec.items():
            if c:
                i = self.ids.setdefault(k, len(self.ids))
                out[i] = Fraction(c)
        return out

    def add(self, vec: dict, label: Any = None) -> bool:
        """Insert ``vec``; returns ``True`` when it raises the rank."""
        label = self.count if label is None else label
        self.count += 1
        v = self._index(vec)
        comb = {label: Fraction(1)}
        while v:
            top = max(v)
            if top not in self.pivots:
                break
            pvec, pcomb = self.pivots[top]
            c = v[top]
            _axpy(v, -c, pvec)
            _axpy(comb, -c, pcomb)
        if not v:
            self.kernel.append(comb)
            return False
        top = max(v)
        inv = 1 / v[top]
        self.pivots[top] = (
            {k: c * inv for k, c in v.items()},
            {k: c * inv for k, c in comb.items()},
        )
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)


def _axpy(y: dict, a: Fraction, x: dict) -> None:
    for k, xv in x.items():
        nv = y.get(k, 0) + a * xv
        if nv:
            y[k] = nv
        else:
            y.pop(k, None)


def rank(vectors: Iterable[dict]) -> int:
    e = Eliminator()
    for v in vectors:
        e.add(v)
    return e.rank


def kernel(columns: Sequence[tuple[Any, dict]]) -> list[Lin]:
    """Basis of the kernel of the map sending each label to its column."""
    e = Eliminator()
    for label, col in columns:
        e.add(col, label)
    return [Lin(v) for v in e.kernel]


def primitive_basis(alg: GradedCoalgebra, n: int) -> list[Lin]:
    """Basis of the primitive elements of degree ``n`` (kernel of reduced coproduct)."""
    if n < 1:
        raise ValueError("primitives live in positive degree")
    cols = [(b, reduced_coproduct(alg, b)) for b in alg.basis(n)]
    return kernel(cols)


def primitive_dimension(alg: GradedCoalgebra, n: int) -> int:
    basis = alg.basis(n)
    return len(basis) - rank(reduced_coproduct(alg, b) for b in basis)


# ---------------------------------------------------------------------------
# antipode


def antipode(alg: Any, b: Any, side: str = "right", cache: dict | None = None) -> Lin:
    """Antipode by the graded recursion.

    ``side="right"``: solve ``m(S (x) id)Delta = eta eps``, isolating the term
    ``S(b) . 1`` (needs ``x . 1 == x``).  ``side="left"``: solve
    ``m(id (x) S)Delta = eta eps``, isolating ``1 . S(b)`` (needs ``1 . x == x``).
    """
    if side not in ("right", "left"):
        raise ValueError(f"side must be 'right' or 'left', not {side!r}")
    if cache is None:
        cache = {}
    return _antipode(alg, b, side, cache)


def _antipode(alg: Any, b: Any, side: str, cache: dict) -> Lin:
    if b in cache:
        return cache[b]
    n = alg.degree(b)
    if n == 0:
        out = Lin.term(b)
    else:
        out = Lin()
        for (x, y), c in alg.coproduct(b).items():
            if side == "right":
                if alg.degree(x) == n:
                    continue
                out.iadd(product_lin(alg, _antipode(alg, x, side, cache), Lin.term(y)), -c)
            else:
                if alg.degree(y) == n:
                    continue
                out.iadd(product_lin(alg, Lin.term(x), _antipode(alg, y, side, cache)), -c)
    cache[b] = out
    return out


def antipode_connected(alg: GradedConnectedHopf, b: Any, cache: dict | None = None) -> Lin:
    """Classical antipode of a connected graded Hopf algebra."""
    if len(alg.basis(0)) != 1:
        raise ValueError(f"{alg.name} is not connected")
    return antipode(alg, b, "right", cache)


def convolution_check(alg: Any, b: Any, s: Callable[[Any], Lin], side: str = "right") -> Lin:
    """``m(S (x) id)Delta(b) - eps(b) 1`` (or the mirrored form); zero when ``s`` is an antipode."""
    out = Lin()
    for (x, y), c in alg.coproduct(b).items():
        if side == "right":
            out.iadd(product_lin(alg, s(x), Lin.term(y)), c)
        else:
            out.iadd(product_lin(alg, Lin.term(x), s(y)), c)
    out.add_term(alg.unit, -alg.counit(b))
    return out


# ---------------------------------------------------------------------------
# truncated power series


def series_mul(a: Sequence[int], b: Sequence[int], n_max: int) -> list[int]:
    out = [0] * (n_max + 1)
    for i, x in enumerate(a[: n_max + 1]):
        if x:
            for j, y in enumerate(b[: n_max + 1 - i]):
                out[i + j] += x * y
    return out


def series_inverse_one_minus(p: Sequence[int], n_max: int) -> list[int]:
    """Coefficients of ``1/(1 - p(t))`` through ``t^n_max``."""
    p = list(p) + [0] * max(0, n_max + 1 - len(p))
    if p[0]:
        raise ValueError("series must have zero constant term")
    out = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        out[n] = sum(p[k] * out[n - k] for k in range(1, n + 1))
    return out


def primitive_series_from_dims(dims: Sequence[int]) -> list[int]:
    """The ``p`` with ``dims = 1/(1-p)``, i.e. ``p = 1 - 1/dims``."""
    n_max = len(dims) - 1
    if dims[0] != 1:
        raise ValueError("constant term must be 1")
    inv = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        inv[n] = -sum(dims[k] * inv[n - k] for k in range(1, n + 1))
    return [0] + [-c for c in inv[1:]]


# ---------------------------------------------------------------------------
# serialization


def coefficient_text(c: Any) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def sorted_terms(x: Lin, key: Callable[[Any], Any]) -> list:
    return sorted(x.items(), key=lambda kv: key(kv[0]))


def format_lin(x: Lin, fmt: Callable[[Any], str], key: Callable[[Any], Any]) -> str:
    """Human form, e.g. ``2 [1,1,3] + [1,2,2] - 1/2 [3]``."""
    if not x:
        return "0"
    parts = []
    for i, (b, c) in enumerate(sorted_terms(x, key)):
        sign = "-" if c < 0 else "+"
        mag = abs(Fraction(c))
        body = fmt(b) if mag == 1 else f"{coefficient_text(mag)} {fmt(b)}"
        if i == 0:
            parts.append(("-" if sign == "-" else "") + body)
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


def lin_to_json(x: Lin, fmt: Callable[[Any], Any], key: Callable[[Any], Any], **extra: Any) -> list:
    out = []
    for b, c in sorted_terms(x, key):
        rec = {"coefficient": coefficient_text(c), "basis": fmt(b)}
        for name, f in extra.items():
            rec[name] = f(b)
        out.append(rec)
    return out
