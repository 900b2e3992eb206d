"""Combinatorial index objects and the splitting/grafting operations on them.

Representations (all immutable, hashable):

* binary tree: ``LEAF == ()`` or a pair ``(left, right)``
* ordered tree: a permutation word, ``tuple`` of ints
* comb: its degree, an ``int``
* composed element: :class:`Composed` ``(outer, inner)``; painted trees and
  composite trees are composed elements viewed through a different lens
* composition: ``tuple`` of positive ints
* simplex face: :class:`SimplexFace` ``(n, subset)``

Text syntax: trees ``.`` and ``(a b)``; words ``2,5,1,4,3`` (empty word
``()``); composed elements ``{c0|c1|...|cn}/d``; compositions ``[1,3]``;
subsets ``{1,3}/4``.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Callable, Iterable, Iterator, NamedTuple, Sequence

LEAF: tuple = ()

Tree = tuple
Word = tuple


class ParseError(ValueError):
    """Malformed literal; ``pos`` is the offending character offset."""

    def __init__(self, message: str, text: str = "", pos: int = 0):
        self.text = text
        self.pos = pos
        if text:
            message = f"{message} at position {pos} in {text!r}"
        super().__init__(message)


class Composed(NamedTuple):
    """Indecomposable tensor ``(d; c_0, ..., c_n)`` with ``n = |d|``."""

    outer: object
    inner: tuple


class SimplexFace(NamedTuple):
    n: int
    subset: tuple  # sorted elements of {1..n}


# ---------------------------------------------------------------------------
# binary trees


def node(left: Tree, right: Tree) -> Tree:
    return (left, right)


@lru_cache(maxsize=None)
def degree(t: Tree) -> int:
    """Number of internal nodes."""
    if not t:
        return 0
    return 1 + degree(t[0]) + degree(t[1])


@lru_cache(maxsize=None)
def tree_key(t: Tree) -> tuple:
    """Canonical sort key: degree first, then the left subtree, then the right."""
    if not t:
        return (0,)
    return (degree(t), tree_key(t[0]), tree_key(t[1]))


@lru_cache(maxsize=None)
def comb_tree(n: int) -> Tree:
    """The comb with all ``n`` nodes on the right branch."""
    t = LEAF
    for _ in range(n):
        t = (LEAF, t)
    return t


@lru_cache(maxsize=None)
def trees(n: int) -> tuple:
    """All binary trees with ``n`` nodes, in canonical order."""
    if n == 0:
        return (LEAF,)
    out = []
    for i in range(n):
        for left in trees(i):
            for right in trees(n - 1 - i):
                out.append((left, right))
    return tuple(out)


@lru_cache(maxsize=None)
def split_tree(t: Tree, leaf: int) -> tuple:
    """Split ``t`` along the path from ``leaf`` to the root.

    Returns ``(t_l, t_r)`` with ``degree(t_l) == leaf``.
    """
    n = degree(t)
    if not 0 <= leaf <= n:
        raise ValueError(f"leaf {leaf} out of range 0..{n}")
    if not t:
        return (LEAF, LEAF)
    a, b = t
    da = degree(a)
    if leaf <= da:
        al, ar = split_tree(a, leaf)
        return (al, (ar, b))
    bl, br = split_tree(b, leaf - da - 1)
    return ((a, bl), br)


def split_tree_multi(t: Tree, leaves: Iterable[int]) -> tuple:
    """Split at a multiset of leaves; ``k`` cuts give ``k + 1`` trees."""
    n = degree(t)
    cuts = sorted(leaves)
    for i in cuts:
        if not 0 <= i <= n:
            raise ValueError(f"leaf {i} out of range 0..{n}")
    out = []
    rest, offset = t, 0
    for i in cuts:
        left, rest = split_tree(rest, i - offset)
        out.append(left)
        offset = i
    out.append(rest)
    return tuple(out)


@lru_cache(maxsize=None)
def graft_trees(forest: tuple, base: Tree) -> Tree:
    """Replace leaf ``i`` of ``base`` by ``forest[i]``."""
    if len(forest) != degree(base) + 1:
        raise ValueError(
            f"forest of {len(forest)} trees cannot graft onto {degree(base) + 1} leaves"
        )
    if not base:
        return forest[0]
    a, b = base
    k = degree(a) + 1
    return (graft_trees(forest[:k], a), graft_trees(forest[k:], b))


def kappa(t: Tree) -> int:
    """Comb of the same degree (combs are represented by their degree)."""
    return degree(t)


# ---------------------------------------------------------------------------
# ordered trees (permutation words)


def is_permutation(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def _check_permutation(w: Sequence[int]) -> None:
    if not is_permutation(w):
        raise ValueError(f"{tuple(w)} is not a permutation word")


def tau(w: Word) -> Tree:
    """Underlying binary tree of an ordered tree; the maximum letter is the root."""
    _check_permutation(w)
    return _tau(tuple(w))


@lru_cache(maxsize=None)
def _tau(w: Word) -> Tree:
    if not w:
        return LEAF
    i = w.index(max(w))
    return (_tau(w[:i]), _tau(w[i + 1:]))


def standardize(word: Sequence[int]) -> Word:
    """Replace each letter by its rank (1 = smallest)."""
    if len(set(word)) != len(word):
        raise ValueError(f"repeated letters in {tuple(word)}")
    rank = {a: i for i, a in enumerate(sorted(word), 1)}
    return tuple(rank[a] for a in word)


def split_word(w: Word, positions: Iterable[int], standardized: bool = False) -> tuple:
    """Cut ``w`` at gap positions (a multiset) into consecutive segments."""
    n = len(w)
    cuts = sorted(positions)
    for i in cuts:
        if not 0 <= i <= n:
            raise ValueError(f"position {i} out of range 0..{n}")
    bounds = [0, *cuts, n]
    segs = tuple(tuple(w[bounds[j]:bounds[j + 1]]) for j in range(len(bounds) - 1))
    if standardized:
        segs = tuple(standardize(s) for s in segs)
    return segs


def graft_words(forest: Sequence[Word], v: Word) -> Word:
    """Graft a forest of word segments onto ``v``; ``v``'s labels go on top."""
    if len(forest) != len(v) + 1:
        raise ValueError(f"forest of {len(forest)} segments cannot graft onto {len(v) + 1} leaves")
    shift = sum(len(s) for s in forest)
    out = list(forest[0])
    for letter, seg in zip(v, forest[1:]):
        out.append(letter + shift)
        out.extend(seg)
    return tuple(out)


def permutations(n: int) -> tuple:
    return tuple(itertools.permutations(range(1, n + 1)))


# ---------------------------------------------------------------------------
# multisets and weak compositions


def multisets(top: int, k: int) -> Iterator[tuple]:
    """Sorted multisets of size ``k`` drawn from ``0..top``."""
    return itertools.combinations_with_replacement(range(top + 1), k)


def weak_compositions(total: int, parts: int) -> Iterator[tuple]:
    """Weak compositions of ``total`` into ``parts`` parts, lexicographic."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in weak_compositions(total - first, parts - 1):
            yield (first, *rest)


# ---------------------------------------------------------------------------
# composed elements: painted trees and composite trees


def composed_objects(
    n: int,
    outer_basis: Callable[[int], Sequence],
    inner_basis: Callable[[int], Sequence],
    outer_degree: Callable[[object], int],
) -> list:
    """Every ``(d; c_0..c_m)`` of total degree ``n``."""
    out = []
    for m in range(n + 1):
        for d in outer_basis(m):
            if outer_degree(d) != m:
                raise ValueError("outer basis returned an element of the wrong degree")
            for sizes in weak_compositions(n - m, m + 1):
                for inner in itertools.product(*(inner_basis(s) for s in sizes)):
                    out.append(Composed(d, tuple(inner)))
    return out


def painted_view(e: Composed) -> tuple:
    """``(shape, painted)``: painted nodes are the nodes coming from the outer tree.

    Nodes are numbered 1..n in infix order.
    """
    d, inner = e
    painted: set[int] = set()

    def walk(base: Tree, forest: tuple, start: int) -> Tree:
        # start = number of shape nodes to the left of this subtree
        if not base:
            return forest[0]
        a, b = base
        k = degree(a) + 1
        left = walk(a, forest[:k], start)
        root = start + degree(left) + 1
        painted.add(root)
        right = walk(b, forest[k:], root)
        return (left, right)

    shape = walk(d, tuple(inner), 0)
    return shape, frozenset(painted)


def is_upper_ideal(shape: Tree, painted: Iterable[int]) -> bool:
    """Every painted node has its whole root path painted."""
    painted = set(painted)
    ok = True

    def walk(t: Tree, start: int, parent_painted: bool) -> None:
        nonlocal ok
        if not t:
            return
        idx = start + degree(t[0]) + 1
        here = idx in painted
        if here and not parent_painted:
            ok = False
        walk(t[0], start, here)
        walk(t[1], idx, here)

    walk(shape, 0, True)
    return ok and all(1 <= i <= degree(shape) for i in painted)


def from_painted(shape: Tree, painted: Iterable[int]) -> Composed:
    """Inverse of :func:`painted_view`."""
    painted = frozenset(painted)
    if not is_upper_ideal(shape, painted):
        raise ValueError("painted nodes do not form an upper order ideal")

    def walk(t: Tree, start: int) -> tuple:
        if not t:
            return LEAF, (LEAF,)
        idx = start + degree(t[0]) + 1
        if idx not in painted:
            return LEAF, (t,)
        dl, fl = walk(t[0], start)
        dr, fr = walk(t[1], idx)
        return (dl, dr), fl + fr

    d, forest = walk(shape, 0)
    return Composed(d, forest)


def composite_view(e: Composed) -> tuple:
    """``(shape, weights)`` of a tree carrying combs; weight = leaves of the comb."""
    return e.outer, tuple(c + 1 for c in e.inner)


def from_composite(shape: Tree, weights: Sequence[int]) -> Composed:
    if len(weights) != degree(shape) + 1:
        raise ValueError(f"{len(weights)} weights for a tree with {degree(shape) + 1} leaves")
    if any(w < 1 for w in weights):
        raise ValueError("weights must be positive")
    return Composed(shape, tuple(w - 1 for w in weights))


# ---------------------------------------------------------------------------
# compositions and simplex faces


def composition_degree(c: Sequence[int]) -> int:
    return sum(c) - 1


def compositions(n: int) -> tuple:
    """Compositions of ``n + 1`` in lexicographic order."""
    total = n + 1
    out = []

    def rec(rest: int, prefix: tuple) -> None:
        if rest == 0:
            out.append(prefix)
            return
        for a in range(1, rest + 1):
            rec(rest - a, prefix + (a,))

    rec(total, ())
    return tuple(out)


def composition_to_composed(c: Sequence[int]) -> Composed:
    """Comb over combs: ``len(c) - 1`` outer nodes, inner comb degrees ``c_i - 1``."""
    return Composed(len(c) - 1, tuple(a - 1 for a in c))


def composed_to_composition(e: Composed) -> tuple:
    return tuple(a + 1 for a in e.inner)


def subsets(n: int) -> tuple:
    out = []
    for k in range(n + 1):
        out.extend(itertools.combinations(range(1, n + 1), k))
    return tuple(SimplexFace(n, s) for s in sorted(out))


def simplex_face(n: int, subset: Iterable[int]) -> SimplexFace:
    s = tuple(sorted(set(subset)))
    if any(not 1 <= x <= n for x in s):
        raise ValueError(f"subset {s} not contained in [1..{n}]")
    return SimplexFace(n, s)


def phi(s: SimplexFace) -> tuple:
    """Subset ``{a < b < ... < c}`` of [n] to the composition ``(a, b-a, ..., n+1-c)``."""
    n, sub = s
    marks = (0, *sub, n + 1)
    return tuple(marks[i + 1] - marks[i] for i in range(len(marks) - 1))


def phi_inv(c: Sequence[int]) -> SimplexFace:
    sums = list(itertools.accumulate(c))
    return SimplexFace(sums[-1] - 1, tuple(sums[:-1]))


# ---------------------------------------------------------------------------
# enumeration

FAMILIES = ("trees", "perms", "combs", "painted", "composite", "compositions", "subsets")


def enumerate_basis(family: str, n: int) -> list:
    """Complete degree-``n`` enumeration of a family in canonical order."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if family == "trees":
        return list(trees(n))
    if family == "perms":
        return list(permutations(n))
    if family == "combs":
        return [n]
    if family == "painted":
        objs = composed_objects(n, trees, trees, degree)
        return sorted(objs, key=lambda e: (tree_key(e.outer), tuple(map(tree_key, e.inner))))
    if family == "composite":
        objs = composed_objects(n, trees, lambda k: (k,), degree)
        return sorted(objs, key=lambda e: (tree_key(e.outer), e.inner))
    if family == "compositions":
        return list(compositions(n))
    if family == "subsets":
        return list(subsets(n))
    raise ValueError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# text syntax


def format_tree(t: Tree) -> str:
    if not t:
        return "."
    return f"({format_tree(t[0])} {format_tree(t[1])})"


class _Reader:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            self.fail(f"expected {ch!r}")
        self.pos += 1

    def fail(self, message: str):
        raise ParseError(message, self.text, self.pos)

    def done(self) -> None:
        if self.peek():
            self.fail("unexpected trailing input")


def _read_tree(r: _Reader) -> Tree:
    ch = r.peek()
    if ch == ".":
        r.pos += 1
        return LEAF
    if ch == "(":
        r.pos += 1
        left = _read_tree(r)
        right = _read_tree(r)
        r.expect(")")
        return (left, right)
    r.fail("expected '.' or '('")


def parse_tree(text: str) -> Tree:
    r = _Reader(text)
    t = _read_tree(r)
    r.done()
    return t


def _parse_ints(text: str, what: str) -> tuple:
    body = text.strip()
    if not body:
        return ()
    out = []
    pos = 0
    for piece in body.split(","):
        token = piece.strip()
        if not token.isdigit():
            raise ParseError(f"bad {what} entry {token!r}", text, text.find(piece, pos))
        out.append(int(token))
        pos += len(piece) + 1
    return tuple(out)


def format_word(w: Word) -> str:
    return ",".join(map(str, w)) if w else "()"


def parse_word(text: str) -> Word:
    body = text.strip()
    if body == "()":
        return ()
    w = _parse_ints(body, "word")
    if not w or not is_permutation(w):
        raise ParseError("not a permutation word", text, 0)
    return w


def format_composition(c: Sequence[int]) -> str:
    return "[" + ",".join(map(str, c)) + "]"


def parse_composition(text: str) -> tuple:
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ParseError("composition must be written [a,b,...]", text, 0)
    c = _parse_ints(body[1:-1], "composition")
    if not c or any(a < 1 for a in c):
        raise ParseError("composition parts must be positive", text, 1)
    return c


def format_subset(s: SimplexFace) -> str:
    return "{" + ",".join(map(str, s.subset)) + "}/" + str(s.n)


def parse_subset(text: str) -> SimplexFace:
    body = text.strip()
    if not body.startswith("{") or "}/" not in body:
        raise ParseError("subset must be written {a,b,...}/n", text, 0)
    close = body.index("}/")
    elems = _parse_ints(body[1:close], "subset")
    n_text = body[close + 2:].strip()
    if not n_text.isdigit():
        raise ParseError("bad ground set size", text, close + 2)
    n = int(n_text)
    if len(set(elems)) != len(elems):
        raise ParseError("repeated subset element", text, 1)
    try:
        return simplex_face(n, elems)
    except ValueError as exc:
        raise ParseError(str(exc), text, 1) from None


def format_composed(e: Composed, fmt_outer: Callable, fmt_inner: Callable) -> str:
    return "{" + "|".join(fmt_inner(c) for c in e.inner) + "}/" + fmt_outer(e.outer)


def parse_composed(text: str, parse_outer: Callable, parse_inner: Callable) -> Composed:
    body = text.strip()
    if not body.startswith("{"):
        raise ParseError("composed element must be written {c0|...|cn}/d", text, 0)
    close = body.rfind("}/")
    if close < 0:
        raise ParseError("missing '}/'", text, len(body))
    inner = tuple(parse_inner(piece) for piece in body[1:close].split("|"))
    return Composed(parse_outer(body[close + 2:]), inner)


def format_comb(n: int) -> str:
    return f"c{n}"


def parse_comb(text: str) -> int:
    body = text.strip()
    if body[:1] == "c" and body[1:].isdigit():
        return int(body[1:])
    if body[:1] in ".(":
        return kappa(parse_tree(body))
    raise ParseError("comb must be written cN or as a tree", text, 0)
