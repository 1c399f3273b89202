from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations
from settings import AUDIT_MAX_N, logging
from scripts.simplicial import EdgeSource
from scripts.simplicial.differences import proper_remainder_oracle, proper_remainder_rule, vertex_set
from scripts.simplicial.simplices import OrbitReport, enumerate_simplices, max_dimension, orbit_classify
from scripts.torus import LatticeClass

RULE_VS_ORACLE = "rule_vs_oracle"
SUPPORT = "support"
ORBIT_COUNT = "orbit_count"
NORMAL_COUNT = "normal_count"
DIMENSION = "dimension"


@dataclass(frozen=True)
class Finding:
    check: str
    detail: str


@dataclass
class AuditReport:
    n: int
    lattice: LatticeClass
    max_dimension: int
    orbit_reports: list[OrbitReport] = field(default_factory=list)
    findings: list[Finding] = field(default_factory=list)

    @property
    def confirmed(self) -> bool:
        return not self.findings


def rule_disagreements(n: int, lattice: LatticeClass) -> list[Finding]:
    findings = []
    for first, second in combinations(vertex_set(n, lattice), 2):
        remainder = proper_remainder_oracle(lattice, first, second)
        if proper_remainder_rule(first, second) != (remainder is not None):
            findings.append(Finding(
                RULE_VS_ORACLE,
                f"{first} ~ {second}: rule={proper_remainder_rule(first, second)}, oracle={remainder}",
            ))
    return findings


def support_violations(n: int, lattice: LatticeClass, top: int) -> list[Finding]:
    ''' Every simplex of positive dimension has one marker and supports meeting in a single common index '''
    findings = []
    for dimension in range(1, top + 1):
        for simplex in enumerate_simplices(n, lattice, dimension):
            label = "{" + "; ".join(str(vertex) for vertex in simplex) + "}"
            supports = [vertex.support for vertex in simplex]
            if len({vertex.marker for vertex in simplex}) != 1:
                findings.append(Finding(SUPPORT, f"{label}: mixed markers"))
            if any(len(a & b) != 1 for a, b in combinations(supports, 2)):
                findings.append(Finding(SUPPORT, f"{label}: supports do not meet in exactly one index"))
            if len(reduce(frozenset.intersection, supports)) != 1:
                findings.append(Finding(SUPPORT, f"{label}: no index common to all supports"))
    return findings


def audit_lemmas(n: int, lattice: LatticeClass, max_n: int = AUDIT_MAX_N) -> AuditReport:
    """
    Checks the combinatorial claims about the difference complex on one lattice
    class: the adjacency rule against the oracle, the support structure of
    simplices, orbit counts (|M| per dimension, |M|/2 for vertices) with one
    normal simplex per orbit, and top dimension n-2. Anything off is a finding.
    """
    if n > max_n:
        raise ValueError(f"Audits are limited to n <= {max_n}, got n={n}")
    top = max_dimension(n, lattice, EdgeSource.ORACLE)
    report = AuditReport(n, lattice, top)
    report.findings.extend(rule_disagreements(n, lattice))
    report.findings.extend(support_violations(n, lattice, top))

    for dimension in range(top + 1):
        orbits = orbit_classify(n, lattice, dimension)
        report.orbit_reports.append(orbits)
        if len(orbits.orbits) != orbits.expected_count:
            report.findings.append(Finding(
                ORBIT_COUNT, f"dimension {dimension}: {len(orbits.orbits)} orbits, expected {orbits.expected_count}"
            ))
        for orbit in orbits.orbits:
            if len(orbit.normal) != 1:
                representative = "{" + "; ".join(str(vertex) for vertex in orbit.representative) + "}"
                report.findings.append(Finding(
                    NORMAL_COUNT, f"orbit of {representative} holds {len(orbit.normal)} normal simplices"
                ))

    if top != n - 2:
        report.findings.append(Finding(DIMENSION, f"top dimension {top}, expected {n - 2}"))

    for finding in report.findings:
        logging.warning(f"Audit n={n} {lattice.value}: {finding.check}: {finding.detail}")
    logging.info(f"Audit n={n} {lattice.value}: {len(report.findings)} findings")
    return report
