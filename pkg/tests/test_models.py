"""
Tests for the pydantic output models (models.py).
"""
from __future__ import annotations

import json

import pytest
from pydantic import ValidationError

from chebpsi.minpoly import psi, psi_expr
from chebpsi.models import (
    CheckFailure,
    CheckReport,
    ExprModel,
    FactorRecord,
    PsiRecord,
    TableRow,
    VerifySummary,
    coeff_strings,
    poly_from_strings,
)
from chebpsi.poly import IntPoly


class TestPsiRecord:
    def test_json_roundtrip(self):
        poly = psi(60)
        expr = psi_expr(60)
        record = PsiRecord(
            n=60,
            degree=poly.degree,
            expr=ExprModel(num=expr.num_strings(), den=expr.den_strings()),
            text=str(expr),
            coeffs=coeff_strings(poly),
        )
        data = json.loads(record.model_dump_json())
        assert data["expr"] == {"num": ["q-_15", "q-_1"], "den": ["q-_5", "q-_3"]}
        assert data["coeffs"][:3] == ["1", "0", "-7"]
        restored = PsiRecord.model_validate(data)
        assert restored.polynomial() == poly

    def test_big_coefficients_survive(self):
        poly = psi(401)
        record = PsiRecord(n=401, degree=poly.degree, coeffs=coeff_strings(poly))
        restored = PsiRecord.model_validate_json(record.model_dump_json())
        assert restored.polynomial() == poly
        assert max(abs(c) for c in poly.coeffs) > 2 ** 64

    def test_n_must_be_positive(self):
        with pytest.raises(ValidationError):
            PsiRecord(n=0, degree=1, coeffs=["1"])


class TestSmallModels:
    def test_coeff_strings(self):
        p = IntPoly((-2, 1))
        assert coeff_strings(p) == ["1", "-2"]
        assert poly_from_strings(["1", "-2"]) == p

    def test_factor_kind_pattern(self):
        assert FactorRecord(kind="V", n=7, psi_factors=[6, 10, 30]).checked is False
        with pytest.raises(ValidationError):
            FactorRecord(kind="U", n=7, psi_factors=[])

    def test_table_row_exclude_none(self):
        row = TableRow(n=4, expr="q-_1")
        assert row.model_dump(exclude_none=True) == {"n": 4, "expr": "q-_1"}


class TestReports:
    def test_report_lines(self):
        report = CheckReport(name="lehmer", range="3<=n<=300")
        assert report.line() == "PASS lehmer range=3<=n<=300"
        failure = CheckFailure(params={"n": 5, "side": "lift"}, expected="a", actual="b")
        report.failures.append(failure)
        assert report.line() == "FAIL lehmer at n=5, side=lift"

    def test_summary_roundtrip(self):
        report = CheckReport(name="degree_law", range="1<=n<=10", cases=10)
        summary = VerifySummary(max_n=10, passed=True, reports=[report])
        restored = VerifySummary.model_validate_json(summary.model_dump_json())
        assert restored.reports[0].cases == 10
        assert restored.reports[0].passed
