from __future__ import annotations

import pytest
from scripts.simplicial.audit import RULE_VS_ORACLE, audit_lemmas, rule_disagreements
from scripts.torus import LatticeClass


@pytest.mark.parametrize("lattice", [LatticeClass.GENERIC, LatticeClass.SQUARE])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_lemmas_hold_off_hexagonal(lattice, n):
    report = audit_lemmas(n, lattice)
    assert report.confirmed, report.findings
    assert report.max_dimension == n - 2
    assert len(report.orbit_reports) == n - 1


def test_hexagonal_audit_reports_findings():
    report = audit_lemmas(3, LatticeClass.HEXAGONAL)
    assert not report.confirmed
    disagreements = [f for f in report.findings if f.check == RULE_VS_ORACLE]
    assert len(disagreements) == len(rule_disagreements(3, LatticeClass.HEXAGONAL)) == 18


def test_audit_size_limit():
    with pytest.raises(ValueError):
        audit_lemmas(7, LatticeClass.GENERIC, max_n=6)


@pytest.mark.slow
def test_lemmas_hold_for_six_strands():
    assert audit_lemmas(6, LatticeClass.SQUARE).confirmed
