"""Command-line front end.

    cofreecomp product --algebra cc --flavor right "[1,3]" "[2]"
    cofreecomp dims --algebra ssym.csym --max 5
    cofreecomp verify --all --format json

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 unknown
algebra, 4 parse failure, 5 degree/size cap exceeded, 6 operation not
available for the chosen algebra.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Sequence

from . import __version__
from . import verify as vf
from .basehopf import BASE_ALGEBRAS
from .combinat import ParseError
from .compose import nine_compositions
from .exactalg import (
    Lin,
    antipode,
    coefficient_text,
    extend,
    format_lin,
    primitive_basis,
    primitive_dimension,
    product_lin,
    sorted_terms,
)
from .named import cc_connection, cksym, deltasym, psym
from .operadic import Connection, connection_catalog

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_UNKNOWN_ALGEBRA = 3
EXIT_PARSE = 4
EXIT_CAP = 5
EXIT_UNSUPPORTED = 6

ENV_MAX_DEGREE = "COFREECOMP_MAX_DEGREE"
DEFAULT_MAX_DEGREE = 4
DIMS_LIMIT = 14

ALGEBRA_NAMES = ("ssym", "ysym", "csym", *nine_compositions(), "psym", "cksym", "cc", "deltasym")


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


@dataclass
class Target:
    """What the CLI needs from an algebra: a coalgebra, maybe a product, maybe a connection."""

    name: str
    alg: Any
    product: Callable[[Any, Any], Lin] | None = None
    antipode_side: str | None = None
    conn: Connection | None = None


def resolve(name: str, flavor: str | None = None, variant: str | None = None) -> Target:
    if name in BASE_ALGEBRAS:
        alg = BASE_ALGEBRAS[name]
        return Target(name, alg, alg.product, "right")
    if name == "psym":
        conn = _check_flavor(psym(), flavor)
    elif name == "cksym":
        conn = _check_flavor(cksym(), flavor)
    elif name == "cc":
        conn = cc_connection(flavor or "right")
    elif name == "deltasym":
        if flavor is not None:
            raise CliError("deltasym takes --variant swap|noswap, not --flavor", EXIT_USAGE)
        conn = deltasym(variant or "swap")
    elif name in nine_compositions():
        if flavor is None:
            return Target(name, nine_compositions()[name])
        conn = connection_catalog().get(f"{name}/{flavor}")
        if conn is None:
            raise CliError(f"{name} carries no {flavor} connection", EXIT_UNSUPPORTED)
    else:
        raise CliError(
            f"unknown algebra {name!r}; choose from {', '.join(ALGEBRA_NAMES)}", EXIT_UNKNOWN_ALGEBRA
        )
    return Target(conn.name, conn, conn.product, conn.identity_side, conn)


def _check_flavor(conn: Connection, flavor: str | None) -> Connection:
    if flavor is not None and flavor != conn.flavor:
        raise CliError(f"{conn.name} only has a {conn.flavor} flavor", EXIT_UNSUPPORTED)
    return conn


# ---------------------------------------------------------------------------
# literals

_COEFF = re.compile(r"\s*(-?\d+(?:/\d+)?)\s*(?:\*\s*|\s+)(.+)$", re.S)


def _split_terms(text: str) -> list[tuple[int, str]]:
    """Split at depth-0 ``+``/``-`` surrounded by whitespace."""
    terms, depth, start, sign = [], 0, 0, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
        elif (
            ch in "+-"
            and depth == 0
            and 0 < i < len(text) - 1
            and text[i - 1].isspace()
            and text[i + 1].isspace()
        ):
            terms.append((sign, text[start:i]))
            sign = 1 if ch == "+" else -1
            start = i + 1
        i += 1
    terms.append((sign, text[start:]))
    return terms


def parse_element(alg: Any, text: str) -> Lin:
    """A basis literal, or a combination such as ``2 [1,1,3] + [1,2,2]``."""
    if not text.strip():
        raise ParseError("empty literal", text, 0)
    try:
        return Lin.term(alg.parse(text))
    except ParseError as first:
        terms = _split_terms(text)
        if len(terms) == 1 and not _COEFF.match(text) and not text.lstrip().startswith("-"):
            raise first
    out = Lin()
    for sign, piece in terms:
        piece = piece.strip()
        if piece[:1] == "-" and not piece[1:2].isdigit():
            sign, piece = -sign, piece[1:]
        try:
            out.add_term(alg.parse(piece), sign)
            continue
        except ParseError:
            m = _COEFF.match(piece)
            if not m:
                raise
        out.add_term(alg.parse(m.group(2)), sign * Fraction(m.group(1)))
    return out


# ---------------------------------------------------------------------------
# output


def _legs_fmt(legs: Sequence[Any]) -> tuple[Callable, Callable, Callable]:
    if len(legs) == 1:
        a = legs[0]
        return a.fmt, a.sort_key, a.degree
    return (
        lambda k: " ⊗ ".join(a.fmt(b) for a, b in zip(legs, k)),
        lambda k: tuple(a.sort_key(b) for a, b in zip(legs, k)),
        lambda k: [a.degree(b) for a, b in zip(legs, k)],
    )


def text_of(x: Lin, legs: Sequence[Any]) -> str:
    fmt, key, _ = _legs_fmt(legs)
    return format_lin(x, fmt, key)


def json_of(x: Lin, legs: Sequence[Any]) -> list[dict]:
    fmt, key, deg = _legs_fmt(legs)
    out = []
    for b, c in sorted_terms(x, key):
        basis = [a.fmt(y) for a, y in zip(legs, b)] if len(legs) > 1 else fmt(b)
        out.append({"coefficient": coefficient_text(c), "basis": basis, "degree": deg(b)})
    return out


def _emit(args, records: list[dict], text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(records, indent=2, ensure_ascii=False))
    else:
        for line in text_lines:
            print(line)


def _check_size(alg: Any, n: int) -> None:
    size = len(alg.basis(n))
    if size > vf.MAX_BASIS:
        raise CliError(f"{alg.name} has {size} basis elements in degree {n}", EXIT_CAP)


def _max_degree(args) -> int:
    if getattr(args, "max_degree", None) is not None:
        return args.max_degree
    env = os.environ.get(ENV_MAX_DEGREE)
    if env:
        try:
            return int(env)
        except ValueError:
            raise CliError(f"{ENV_MAX_DEGREE} must be an integer, got {env!r}", EXIT_USAGE) from None
    return DEFAULT_MAX_DEGREE


# ---------------------------------------------------------------------------
# subcommands


def cmd_coproduct(args) -> int:
    t = resolve(args.algebra, args.flavor, args.variant)
    records, lines = [], []
    for lit in args.elements:
        x = parse_element(t.alg, lit)
        y = extend(t.alg.coproduct, x)
        lines.append(text_of(y, [t.alg, t.alg]))
        records.append({"algebra": t.name, "operation": "coproduct",
                        "input": text_of(x, [t.alg]), "result": json_of(y, [t.alg, t.alg])})
    _emit(args, records, lines)
    return EXIT_OK


def cmd_product(args) -> int:
    t = resolve(args.algebra, args.flavor, args.variant)
    if t.product is None:
        raise CliError(f"{t.name} has no product; pass --flavor left|right", EXIT_UNSUPPORTED)
    if len(args.elements) < 2:
        raise CliError("product needs at least two elements", EXIT_USAGE)
    xs = [parse_element(t.alg, lit) for lit in args.elements]
    y = xs[0]
    for x in xs[1:]:
        y = product_lin(t.alg, y, x)
    record = {"algebra": t.name, "operation": "product",
              "input": [text_of(x, [t.alg]) for x in xs], "result": json_of(y, [t.alg])}
    _emit(args, [record], [text_of(y, [t.alg])])
    return EXIT_OK


def cmd_antipode(args) -> int:
    t = resolve(args.algebra, args.flavor, args.variant)
    if t.product is None:
        raise CliError(f"{t.name} has no product; pass --flavor left|right", EXIT_UNSUPPORTED)
    cache: dict = {}

    def s(x: Lin) -> Lin:
        return extend(lambda b: antipode(t.alg, b, t.antipode_side, cache), x)

    records, lines = [], []
    if args.elements:
        for lit in args.elements:
            x = parse_element(t.alg, lit)
            y = s(x)
            lines.append(text_of(y, [t.alg]))
            records.append({"algebra": t.name, "operation": "antipode", "side": t.antipode_side,
                            "input": text_of(x, [t.alg]), "result": json_of(y, [t.alg])})
    else:
        for n in range(_max_degree(args) + 1):
            _check_size(t.alg, n)
            for b in t.alg.basis(n):
                y = s(Lin.term(b))
                lines.append(f"S({t.alg.fmt(b)}) = {text_of(y, [t.alg])}")
                records.append({"algebra": t.name, "operation": "antipode", "side": t.antipode_side,
                                "input": t.alg.fmt(b), "degree": n, "result": json_of(y, [t.alg])})
    _emit(args, records, lines)
    return EXIT_OK


def cmd_coaction(args) -> int:
    t = resolve(args.algebra, args.flavor, args.variant)
    if t.conn is None:
        raise CliError(f"{t.name} is not a connection; coaction needs psym, cksym, cc, deltasym "
                       "or a composition with --flavor", EXIT_UNSUPPORTED)
    legs = [t.conn, t.conn.target]
    records, lines = [], []
    for lit in args.elements:
        x = parse_element(t.alg, lit)
        y = extend(t.conn.rho, x)
        lines.append(text_of(y, legs))
        records.append({"algebra": t.name, "operation": "coaction",
                        "input": text_of(x, [t.alg]), "result": json_of(y, legs)})
    _emit(args, records, lines)
    return EXIT_OK


def cmd_dims(args) -> int:
    t = resolve(args.algebra, args.flavor, args.variant)
    n_max = args.max_degree if args.max_degree is not None else _max_degree(args)
    if n_max > DIMS_LIMIT:
        raise CliError(f"dims is limited to degree {DIMS_LIMIT}", EXIT_CAP)
    for n in range(n_max + 1):
        _check_size(t.alg, n)
    dims = t.alg.dims(n_max)
    if args.format == "json":
        print(json.dumps({"algebra": t.name, "dims": [{"n": n, "dim": d} for n, d in enumerate(dims)]},
                         indent=2))
    elif args.format == "csv":
        print("n,dim")
        for n, d in enumerate(dims):
            print(f"{n},{d}")
    else:
        print(",".join(map(str, dims)))
    return EXIT_OK


def cmd_primitives(args) -> int:
    t = resolve(args.algebra, args.flavor, args.variant)
    n_max = _max_degree(args)
    rows = []
    for n in range(1, n_max + 1):
        _check_size(t.alg, n)
        basis = primitive_basis(t.alg, n) if args.basis else None
        dim = len(basis) if basis is not None else primitive_dimension(t.alg, n)
        rows.append((n, dim, basis))
    if args.format == "json":
        out = {"algebra": t.name, "primitives": []}
        for n, dim, basis in rows:
            rec = {"n": n, "dim": dim}
            if basis is not None:
                rec["basis"] = [json_of(v, [t.alg]) for v in basis]
            out["primitives"].append(rec)
        print(json.dumps(out, indent=2, ensure_ascii=False))
        return EXIT_OK
    print("n,dim")
    for n, dim, basis in rows:
        print(f"{n},{dim}")
        for v in basis or ():
            print(f"  {text_of(v, [t.alg])}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    t = resolve(args.algebra, args.flavor, args.variant)
    degrees = [args.degree] if args.degree is not None else range(_max_degree(args) + 1)
    records, lines = [], []
    for n in degrees:
        _check_size(t.alg, n)
        for b in t.alg.basis(n):
            lines.append(t.alg.fmt(b))
            records.append({"algebra": t.name, "degree": n, "basis": t.alg.fmt(b)})
    _emit(args, records, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    if not args.all and not args.algebra:
        raise CliError("verify needs --all or --algebra NAME", EXIT_USAGE)
    cap = args.max_degree
    if cap is None and os.environ.get(ENV_MAX_DEGREE):
        cap = _max_degree(args)
    jobs = vf.default_suite(cap, include_catalog=True)
    if not args.all:
        jobs = [(label, job) for label, job in jobs if label.split(" ", 1)[-1] == args.algebra]
        if not jobs:
            raise CliError(f"no checks registered for {args.algebra!r}", EXIT_UNKNOWN_ALGEBRA)
    reports = []
    for _, job in jobs:
        r = job()
        reports.append(r)
        if args.format == "text" and not args.quiet:
            print(r.line(), flush=True)
    failed = [r for r in reports if r.status == "fail"]
    if args.format == "json":
        print(vf.reports_json(reports))
    else:
        skipped = sum(r.status == "skipped" for r in reports)
        print(f"{len(reports) - len(failed) - skipped} passed, {len(failed)} failed, {skipped} skipped")
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cofreecomp",
        description="Compositions of combinatorial coalgebras and one-sided Hopf algebras.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, elements: bool = False, formats=("text", "json")):
        sp.add_argument("--algebra", "-a", required=True,
                        help=f"one of: {', '.join(ALGEBRA_NAMES)}")
        sp.add_argument("--flavor", choices=("left", "right"),
                        help="connection side (cc, or a composition with a connection)")
        sp.add_argument("--variant", choices=("swap", "noswap"), help="deltasym product transport")
        sp.add_argument("--format", choices=formats, default="text")
        if elements:
            sp.add_argument("elements", nargs="*", metavar="ELEMENT")

    for name, fn, help_ in (
        ("coproduct", cmd_coproduct, "coproduct of each element"),
        ("product", cmd_product, "left-to-right product of the elements"),
        ("coaction", cmd_coaction, "coaction rho = (1 ⊗ f)Δ of each element"),
    ):
        sp = sub.add_parser(name, help=help_)
        common(sp, elements=True)
        sp.set_defaults(func=fn)

    sp = sub.add_parser("antipode", help="antipode of the elements, or of every basis element")
    common(sp, elements=True)
    sp.add_argument("--max-degree", "--max", type=int, dest="max_degree")
    sp.set_defaults(func=cmd_antipode)

    sp = sub.add_parser("dims", help="dimension of each graded piece")
    common(sp, formats=("text", "csv", "json"))
    sp.add_argument("--max-degree", "--max", type=int, dest="max_degree")
    sp.set_defaults(func=cmd_dims)

    sp = sub.add_parser("primitives", help="dimension (and basis) of the primitives")
    common(sp)
    sp.add_argument("--max-degree", "--max", type=int, dest="max_degree")
    sp.add_argument("--basis", action="store_true", help="also print a kernel basis")
    sp.set_defaults(func=cmd_primitives)

    sp = sub.add_parser("enumerate", help="list basis elements")
    common(sp)
    sp.add_argument("--degree", type=int)
    sp.add_argument("--max-degree", "--max", type=int, dest="max_degree")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("verify", help="run the axiom checks")
    sp.add_argument("--all", action="store_true", help="every instance at default caps")
    sp.add_argument("--algebra", "-a", help="only checks on this algebra")
    sp.add_argument("--max-degree", "--max", type=int, dest="max_degree",
                    help="lower every degree cap to N")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--quiet", "-q", action="store_true", help="summary line only")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
