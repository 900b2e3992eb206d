"""Acceptance criteria, one printed PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import subprocess
import sys
import time
from math import comb

import pytest

from cofreecomp import cli
from cofreecomp import verify as vf
from cofreecomp.basehopf import CSYM
from cofreecomp.compose import composition, nine_compositions
from cofreecomp.exactalg import Lin
from cofreecomp.named import (
    CC,
    cc_coproduct,
    cc_product_right,
    cksym_coproduct,
    cksym_product,
    composite,
    paint_fully,
    psym,
    psym_product,
)

AXIOM_CHECKS = {"coalgebra", "bialgebra", "associative", "one_sided_unit", "antipode",
                "connection", "hopf_module", "operad", "operad_product"}


def _timed(fn, limit):
    t0 = time.perf_counter()
    ok = fn()
    dt = time.perf_counter() - t0
    return ok and dt < limit, dt


# 1. displayed computations


def _csym_divided_powers():
    return all(CSYM.product(m, n) == Lin.term(m + n, comb(m + n, n))
               for m in range(9) for n in range(9 - m))


def _cksym_coproduct():
    expected = Lin()
    for a, b in [((1,), (2, 1, 2)), ((2,), (1, 1, 2)), ((2, 1), (1, 2)), ((2, 1, 1), (2,)), ((2, 1, 2), (1,))]:
        expected.add_term((composite(a), composite(b)), 1)
    return cksym_coproduct(composite((2, 1, 2))) == expected


def _cksym_product():
    expected = Lin()
    for w, c in [((3, 2, 1), 1), ((1, 4, 1), 3), ((1, 2, 3), 1), ((2, 3, 1), 2), ((2, 2, 2), 1), ((1, 3, 2), 2)]:
        expected.add_term(composite(w), c)
    return cksym_product(composite((2, 1)), composite((1, 2, 1))) == expected


def _cc_coproduct():
    return cc_coproduct((1, 3)) == Lin(
        {((1,), (1, 3)): 1, ((1, 1), (3,)): 1, ((1, 2), (2,)): 1, ((1, 3), (1,)): 1})


def _cc_product():
    return cc_product_right((1, 3), (2,)) == Lin({(1, 1, 3): 2, (1, 2, 2): 1, (1, 3, 1): 1})


def _psym_units():
    P = psym()
    one = P.unit
    return all(
        psym_product(q, one) == Lin.term(q) and psym_product(one, q) == Lin.term(paint_fully(q))
        for n in range(4) for q in P.basis(n)
    )


CRITERION_1 = [
    ("CSym x(m)x(n) = binom(m+n,n) x(m+n), m+n <= 8", _csym_divided_powers),
    ("ckSym coproduct of F_(2,1,2), 5 terms", _cksym_coproduct),
    ("ckSym F_(2,1) . F_(1,2,1)", _cksym_product),
    ("cc coproduct of F_[1,3], 4 terms", _cc_coproduct),
    ("cc F_[1,3] . F_[2] = 2F_[1,1,3] + F_[1,2,2] + F_[1,3,1]", _cc_product),
    ("PSym unit laws, degree <= 3", _psym_units),
]


def criterion_1():
    lines, ok = [], True
    for label, fn in CRITERION_1:
        good, dt = _timed(fn, 1.0)
        ok &= good
        lines.append(f"    {'ok ' if good else 'BAD'} {label} ({dt:.3f}s)")
    return ok, lines


# 2. dimension sequences


def _dims_checks():
    results = []
    results.append(("cc = 2^n, n <= 10", CC.dims(10) == [2**n for n in range(11)]))
    results.append(("trees over comb = Catalan, n <= 6",
                    composition("ysym", "csym").dims(6) == [1, 1, 2, 5, 14, 42, 132, 429][1:8]))
    results.append(("perms over comb = 1,2,5,15,54,235",
                    composition("ssym", "csym").dims(5) == [1, 2, 5, 15, 54, 235]))
    results.append(("perms over tree = 1,2,6,22,92,428",
                    composition("ssym", "ysym").dims(5) == [1, 2, 6, 22, 92, 428]))
    for name, E in nine_compositions().items():
        r = vf.check_dims(E, 5 if "ssym" in name else 7)
        results.append((f"{name} enumeration = recursion/convolution", r.passed))
    return results


def criterion_2():
    t0 = time.perf_counter()
    results = _dims_checks()
    dt = time.perf_counter() - t0
    lines = [f"    {'ok ' if good else 'BAD'} {label}" for label, good in results]
    lines.append(f"    total {dt:.2f}s (limit 10s)")
    return all(g for _, g in results) and dt < 10, lines


# 3-5. the verification suite


_SUITE: list | None = None


def suite_reports():
    global _SUITE
    if _SUITE is None:
        _SUITE = vf.run_suite()
    return _SUITE


def _suite_criterion(pred):
    reports = [r for r in suite_reports() if pred(r)]
    lines = [f"    {r.line()}" for r in reports if r.status != "pass"]
    lines.append(f"    {sum(r.passed for r in reports)}/{len(reports)} checks pass")
    return bool(reports) and all(r.passed for r in reports), lines


def criterion_3():
    return _suite_criterion(lambda r: r.name in AXIOM_CHECKS)


def criterion_4():
    return _suite_criterion(lambda r: r.name in ("cofreeness", "primitive_span", "transport"))


def criterion_5():
    return _suite_criterion(lambda r: r.name == "diagram")


# 6. determinism


def criterion_6():
    invocations = [
        ["product", "--algebra", "cc", "--flavor", "right", "[1,3]", "[2]"],
        ["dims", "--algebra", "ssym.csym", "--max", "5"],
        ["coproduct", "--algebra", "cksym", "2,1,2"],
        ["antipode", "--algebra", "cksym", "--max-degree", "3", "--format", "json"],
    ]
    lines, ok = [], True
    for argv in invocations:
        outs = {
            subprocess.run([sys.executable, "-m", "cofreecomp", *argv], capture_output=True, check=True).stdout
            for _ in range(3)
        }
        ok &= len(outs) == 1
        lines.append(f"    {'ok ' if len(outs) == 1 else 'BAD'} {' '.join(argv)}")
    from test_cli import corpus

    items = corpus(1000)
    bad = 0
    for alg, x in items:
        text = cli.text_of(x, [alg])
        y = cli.parse_element(alg, text)
        bad += y != x or cli.text_of(y, [alg]) != text
    ok &= bad == 0 and len(items) == 1000
    lines.append(f"    {'ok ' if bad == 0 else 'BAD'} round trip on {len(items)} elements, {bad} mismatches")
    return ok, lines


CRITERIA = [
    ("1", "displayed computations exact, < 1 s each", criterion_1),
    ("2", "dimension sequences exact, < 10 s total", criterion_2),
    ("3", "axiom suites exhaustive at default caps", criterion_3),
    ("4", "cofreeness and primitive spanning sets", criterion_4),
    ("5", "morphism diagram commutes", criterion_5),
    ("6", "determinism and parse/print round trip", criterion_6),
]


def _report(num, title, fn):
    ok, lines = fn()
    return ok, "\n".join([f"{'PASS' if ok else 'FAIL'} criterion {num}: {title}", *lines])


@pytest.mark.parametrize("num,title,fn", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(num, title, fn, capsys):
    ok, text = _report(num, title, fn)
    with capsys.disabled():
        print("\n" + text)
    assert ok, text


if __name__ == "__main__":
    sys.path.insert(0, __file__.rsplit("/", 1)[0])
    results = []
    for num, title, fn in CRITERIA:
        ok, text = _report(num, title, fn)
        print(text, flush=True)
        results.append(ok)
    sys.exit(0 if all(results) else 1)
