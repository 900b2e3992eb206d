import json

import pytest

from cofreecomp import verify as vf
from cofreecomp.basehopf import CSym
from cofreecomp.exactalg import Lin
from cofreecomp.named import CC, DELTASYM, cc_right, psym


class LopsidedCSym(CSym):
    """Coproduct missing its last term: counit law breaks in degree 1."""

    name = "lopsided"

    def coproduct(self, n):
        return Lin(((i, n - i), 1) for i in range(n))


class NoncommutingProduct(CSym):
    name = "twisted"

    def product(self, m, n):
        out = super().product(m, n)
        return out * 2 if m and n else out


def test_failure_carries_counterexample():
    r = vf.check_coalgebra(LopsidedCSym(), 3)
    assert r.status == "fail"
    assert r.counterexample["input"] == ["c0"]
    assert r.counterexample["lhs"] != r.counterexample["rhs"]


def test_bialgebra_failure():
    r = vf.check_bialgebra(NoncommutingProduct(), 3)
    assert r.status == "fail"
    assert "⊗" in r.counterexample["lhs"] + r.counterexample["rhs"]


def test_cap_reports_skipped(monkeypatch):
    monkeypatch.setattr(vf, "MAX_BASIS", 10)
    r = vf.check_coalgebra(CC, 6)
    assert r.status == "skipped"
    assert not r.passed


def test_one_sided_unit_records_witness():
    r = vf.check_one_sided_unit(cc_right(), 3)
    assert r.passed
    assert "left" not in r.detail.split(";")[0]
    assert "fails at" in r.detail


def test_reports_serialize_stably():
    a = vf.check_coalgebra(psym(), 3).to_dict()
    b = vf.check_coalgebra(psym(), 3).to_dict()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    assert set(a) == {"name", "algebra", "degree_cap", "status", "checked", "detail", "counterexample"}


def test_dims_examples():
    r = vf.check_dims(CC, 8)
    assert r.passed and r.detail == "1,2,4,8,16,32,64,128,256"
    from cofreecomp.compose import composition

    r = vf.check_dims(composition("ssym", "csym"), 5)
    assert r.passed and r.detail == "1,2,5,15,54,235"


def test_cofreeness_and_transport():
    assert vf.check_cofreeness(DELTASYM, 6).passed
    assert vf.check_transport(6).passed


def test_small_suite_passes():
    reports = vf.run_suite(max_degree=2)
    assert reports
    bad = [r.line() for r in reports if r.status != "pass"]
    assert not bad, "\n".join(bad)
    assert all(r.degree_cap <= 2 for r in reports)


def test_suite_labels_unique():
    labels = [label for label, _ in vf.default_suite()]
    assert len(labels) == len(set(labels))
