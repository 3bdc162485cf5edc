"""Accuracy, precision, recall, F1, coverage and normalized runtime."""

from __future__ import annotations

from dataclasses import dataclass, field

from hybridscan.detection.model import Finding
from hybridscan.evaluation.corpus import Label
from hybridscan.evaluation.matching import ConfusionCounts


class EmptyKnownList(ValueError):
    pass


def _ratio(num: float, den: float) -> float | None:
    # undefined ratios stay None rather than collapsing to 0
    return None if den == 0 else num / den


def precision(c: ConfusionCounts) -> float | None:
    return _ratio(c.tp, c.tp + c.fp)


def recall(c: ConfusionCounts) -> float | None:
    return _ratio(c.tp, c.tp + c.fn)


def accuracy(c: ConfusionCounts) -> float | None:
    return _ratio(c.tp + c.tn, c.tp + c.tn + c.fp + c.fn)


def f1_score(p: float | None, r: float | None) -> float | None:
    if p is None or r is None:
        return None
    if p + r == 0:
        return 0.0
    return 2 * p * r / (p + r)


@dataclass(frozen=True)
class CategoryMetrics:
    counts: ConfusionCounts
    accuracy: float | None
    precision: float | None
    recall: float | None
    f1: float | None

    @classmethod
    def of(cls, c: ConfusionCounts) -> CategoryMetrics:
        p, r = precision(c), recall(c)
        return cls(c, accuracy(c), p, r, f1_score(p, r))

    def to_dict(self) -> dict:
        return {**self.counts.to_dict(), "accuracy": self.accuracy, "precision": self.precision,
                "recall": self.recall, "f1": self.f1}


@dataclass(frozen=True)
class MetricsReport:
    per_category: dict[str, CategoryMetrics]
    pooled: CategoryMetrics
    coverage_percent: float | None = None
    runtime_ms_per_kloc: float | None = None
    total_ms: float = 0.0
    total_loc: int = 0
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "perCategory": {k: v.to_dict() for k, v in sorted(self.per_category.items())},
            "pooled": self.pooled.to_dict(),
            "coveragePercent": self.coverage_percent,
            "runtimeMsPerKloc": self.runtime_ms_per_kloc,
            "totalMs": self.total_ms,
            "totalLoc": self.total_loc,
            **self.extra,
        }


def runtime_per_kloc(total_ms: float, total_loc: int) -> float | None:
    return _ratio(total_ms * 1000.0, total_loc)


def metrics_report(counts: dict[str, ConfusionCounts], total_ms: float = 0.0, total_loc: int = 0,
                   coverage_percent: float | None = None) -> MetricsReport:
    pooled = ConfusionCounts()
    for c in counts.values():
        pooled = pooled + c
    return MetricsReport(
        {k: CategoryMetrics.of(c) for k, c in counts.items()},
        CategoryMetrics.of(pooled),
        coverage_percent,
        runtime_per_kloc(total_ms, total_loc),
        total_ms,
        total_loc,
    )


def coverage(findings: list[Finding], known: list[Label]) -> float:
    """Percentage of distinct known CWE issues hit by at least one finding of the same CWE."""
    issues = sorted({(k.path, k.cwe, k.start_line, k.end_line) for k in known if k.cwe is not None})
    if not issues:
        raise EmptyKnownList("no known CWE issues to cover")
    hit = 0
    for path, cwe, lo, hi in issues:
        if any(f.path == path and f.cwe == cwe and f.span.overlaps_lines(lo, hi) for f in findings):
            hit += 1
    return 100.0 * hit / len(issues)
