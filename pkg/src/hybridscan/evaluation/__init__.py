"""Corpora, splits, prediction matching, quality metrics and risk reports."""

from hybridscan.evaluation.corpus import (
    Corpus, CorpusUnit, Label, ManifestSchemaError, load_corpus, manifest_schema, validate_manifest,
)
from hybridscan.evaluation.harness import EvalReport, evaluate
from hybridscan.evaluation.matching import ConfusionCounts, MatchResult, entity_kind, match_findings
from hybridscan.evaluation.metrics import (
    CategoryMetrics, EmptyKnownList, MetricsReport, accuracy, coverage, f1_score, metrics_report,
    precision, recall, runtime_per_kloc,
)
from hybridscan.evaluation.risk import (
    DEFAULT_CWE_SCORES, DEFAULT_RISK_TABLE, Band, RiskReport, RiskTable, band, risk_report, total_risk,
)
from hybridscan.evaluation.split import RatioError, Split, allocate, stratified_split, stratum

__all__ = [
    "Band", "CategoryMetrics", "ConfusionCounts", "Corpus", "CorpusUnit", "DEFAULT_CWE_SCORES",
    "DEFAULT_RISK_TABLE", "EmptyKnownList", "EvalReport", "Label", "ManifestSchemaError", "MatchResult",
    "MetricsReport", "RatioError", "RiskReport", "RiskTable", "Split", "accuracy", "allocate", "band",
    "coverage", "entity_kind", "evaluate", "f1_score", "load_corpus", "manifest_schema", "match_findings",
    "metrics_report", "precision", "recall", "risk_report", "runtime_per_kloc", "stratified_split",
    "stratum", "total_risk", "validate_manifest",
]
