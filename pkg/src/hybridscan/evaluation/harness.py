"""Scan a labeled corpus and score the predictions."""

from __future__ import annotations

from dataclasses import dataclass

from hybridscan.detection.model import Finding
from hybridscan.detection.scan import ScanConfig, ScanResult, scan_units
from hybridscan.evaluation.corpus import Corpus
from hybridscan.evaluation.matching import MatchResult, match_findings
from hybridscan.evaluation.metrics import EmptyKnownList, MetricsReport, coverage, metrics_report


@dataclass
class EvalReport:
    scan: ScanResult
    matches: MatchResult
    metrics: MetricsReport
    flagged: list[dict]

    @property
    def findings(self) -> list[Finding]:
        return self.scan.findings

    def to_dict(self) -> dict:
        return {
            "metrics": self.metrics.to_dict(),
            "skipped": [s.to_dict() for s in self.scan.skipped],
            "flagged": self.flagged,
            "findings": len(self.scan.findings),
        }


def evaluate(corpus: Corpus, config: ScanConfig | None = None, paths: set[str] | None = None) -> EvalReport:
    """Scan the corpus (optionally only ``paths``) and compare against its labels."""
    config = config or ScanConfig()
    units = [u for u in corpus.units if u.ok and (paths is None or u.path in paths)]
    result = scan_units([u.unit for u in units], config)
    labels = [lab for u in units for lab in u.labels]
    trees = {v.unit.path: v.tree for v in result.views.values()}
    cats = sorted(config.enabled, key=lambda r: r.value)
    matches = match_findings(result.findings, labels, trees, cats)
    try:
        cov = coverage(result.findings, labels)
    except EmptyKnownList:
        cov = None
    report = metrics_report(matches.per_category, result.total_ms, result.total_loc, cov)
    flagged = [{"path": u.path, "reason": u.error} for u in corpus.flagged if paths is None or u.path in paths]
    return EvalReport(result, matches, report, flagged)
