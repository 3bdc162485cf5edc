"""CWE-mapped risk scores on a 10-point scale."""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from statistics import fmean

from hybridscan.detection.model import Finding

log = logging.getLogger(__name__)

DEFAULT_CWE_SCORES = {89: 9.0, 78: 8.5, 798: 7.5, 79: 7.0}
SMELL_SCORE = 3.0
UNKNOWN_CWE_SCORE = 5.0


class Band(str, Enum):
    HIGH = "High"
    MEDIUM = "Medium"
    LOW = "Low"


def band(score: float) -> Band:
    if score >= 7.0:
        return Band.HIGH
    if score >= 4.0:
        return Band.MEDIUM
    return Band.LOW


@dataclass(frozen=True)
class RiskTable:
    cwe_scores: dict[int, float] = field(default_factory=lambda: dict(DEFAULT_CWE_SCORES))
    smell_score: float = SMELL_SCORE
    unknown_score: float = UNKNOWN_CWE_SCORE

    def score(self, finding: Finding) -> tuple[float, bool]:
        """(score, whether the CWE was missing from the table)."""
        if finding.cwe is None:
            return self.smell_score, False
        if finding.cwe in self.cwe_scores:
            return self.cwe_scores[finding.cwe], False
        return self.unknown_score, True

    def to_dict(self) -> dict:
        return {"cweScores": {str(k): v for k, v in sorted(self.cwe_scores.items())},
                "smellScore": self.smell_score, "unknownScore": self.unknown_score}

    @classmethod
    def from_dict(cls, d: dict) -> RiskTable:
        return cls({int(k): float(v) for k, v in d.get("cweScores", DEFAULT_CWE_SCORES).items()},
                   float(d.get("smellScore", SMELL_SCORE)), float(d.get("unknownScore", UNKNOWN_CWE_SCORE)))


DEFAULT_RISK_TABLE = RiskTable()


@dataclass(frozen=True)
class CweRisk:
    key: str  # "CWE-89" or "smell"
    count: int
    base_score: float

    @property
    def band(self) -> Band:
        return band(self.base_score)


@dataclass(frozen=True)
class RiskReport:
    before: tuple[CweRisk, ...]
    after: tuple[CweRisk, ...]
    average_before: float
    average_after: float
    unknown_cwes: tuple[int, ...] = ()

    @property
    def band_before(self) -> Band:
        return band(self.average_before)

    @property
    def band_after(self) -> Band:
        return band(self.average_after)

    def to_dict(self) -> dict:
        def rows(rs):
            return [{"key": r.key, "count": r.count, "baseScore": r.base_score, "band": r.band.value} for r in rs]
        return {
            "before": rows(self.before), "after": rows(self.after),
            "averageBefore": self.average_before, "averageAfter": self.average_after,
            "bandBefore": self.band_before.value, "bandAfter": self.band_after.value,
            "unknownCwes": list(self.unknown_cwes),
        }


def finding_scores(findings: list[Finding], table: RiskTable = DEFAULT_RISK_TABLE) -> tuple[list[float], set[int]]:
    scores, unknown = [], set()
    for f in findings:
        s, missing = table.score(f)
        scores.append(s)
        if missing:
            unknown.add(f.cwe)
            log.warning("CWE-%s has no base score; using %.1f", f.cwe, s)
    return scores, unknown


def _rows(findings: list[Finding], table: RiskTable) -> tuple[CweRisk, ...]:
    groups: dict[str, list[float]] = defaultdict(list)
    for f in findings:
        groups[f"CWE-{f.cwe}" if f.cwe is not None else "smell"].append(table.score(f)[0])
    return tuple(CweRisk(k, len(v), v[0]) for k, v in sorted(groups.items()))


def risk_report(before: list[Finding], after: list[Finding], table: RiskTable = DEFAULT_RISK_TABLE) -> RiskReport:
    sb, ub = finding_scores(before, table)
    sa, ua = finding_scores(after, table)
    return RiskReport(
        _rows(before, table), _rows(after, table),
        fmean(sb) if sb else 0.0, fmean(sa) if sa else 0.0,
        tuple(sorted(ub | ua)),
    )


def total_risk(findings: list[Finding], table: RiskTable = DEFAULT_RISK_TABLE) -> float:
    return sum(finding_scores(findings, table)[0])
