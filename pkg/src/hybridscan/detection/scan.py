"""Run every enabled detector over a set of units and fuse the scores."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from hybridscan.detection.clones import detect_duplicated_code
from hybridscan.detection.fusion import emitted, fuse
from hybridscan.detection.model import (
    DEFAULT_POLICY, DEFAULT_WEIGHTS, Candidate, Finding, FusionWeights, Rule, TaintPolicy, Thresholds,
)
from hybridscan.detection.secrets import detect_hardcoded_secret
from hybridscan.detection.semantic import LexicalScorer, SemanticScorer, window_request
from hybridscan.detection.smells import (
    detect_data_class, detect_feature_envy, detect_god_class, detect_long_method,
)
from hybridscan.detection.taint import detect_injection, taint_analyze
from hybridscan.representation import ParseError, SourceUnit, UnitViews, build_views


@dataclass
class ScanConfig:
    thresholds: Thresholds = field(default_factory=Thresholds)
    weights: FusionWeights = DEFAULT_WEIGHTS
    policy: TaintPolicy = DEFAULT_POLICY
    enabled: frozenset[Rule] = frozenset(Rule)
    scorer: SemanticScorer | None = field(default_factory=LexicalScorer)
    context_lines: int = 3


@dataclass(frozen=True)
class SkippedUnit:
    path: str
    line: int
    reason: str

    def to_dict(self) -> dict:
        return {"path": self.path, "line": self.line, "reason": self.reason}


@dataclass
class ScanResult:
    findings: list[Finding] = field(default_factory=list)
    skipped: list[SkippedUnit] = field(default_factory=list)
    views: dict[str, UnitViews] = field(default_factory=dict)
    candidates: list[Candidate] = field(default_factory=list)
    timings_ms: dict[str, float] = field(default_factory=dict)
    scorer_fallbacks: list[dict] = field(default_factory=list)

    @property
    def total_ms(self) -> float:
        return sum(self.timings_ms.values())

    @property
    def total_loc(self) -> int:
        return sum(v.unit.loc for v in self.views.values())


def unit_candidates(views: UnitViews, config: ScanConfig) -> list[Candidate]:
    """Every per-unit candidate (clones excluded: they need the whole unit set)."""
    unit, tree, t = views.unit, views.tree, config.thresholds
    on = config.enabled
    out: list[Candidate] = []
    for q, node in tree.entities():
        m = views.metrics(node)
        if node.kind == "FunctionDef":
            if Rule.LONG_METHOD in on and (c := detect_long_method(unit.path, q, node, m, t)):
                out.append(c)
            if Rule.FEATURE_ENVY in on and (c := detect_feature_envy(unit.path, q, tree, node, t)):
                out.append(c)
        else:
            if Rule.GOD_CLASS in on and (c := detect_god_class(unit.path, q, node, m, t)):
                out.append(c)
            if Rule.DATA_CLASS in on and (c := detect_data_class(unit.path, q, node, m, t)):
                out.append(c)
    if Rule.HARDCODED_SECRET in on:
        out.extend(detect_hardcoded_secret(unit.path, tree, t))
    if on & {Rule.SQL_INJECTION, Rule.COMMAND_INJECTION, Rule.XSS}:
        for fv in views.functions.values():
            paths = taint_analyze(tree, fv, config.policy)
            out.extend(c for c in detect_injection(unit.path, tree, fv, paths) if c.rule in on)
    return out


def clone_candidates(views: list[UnitViews], config: ScanConfig) -> list[Candidate]:
    by_id = {v.unit.id: v for v in views}
    pairs = detect_duplicated_code([(v.unit.id, v.tokens) for v in views], config.thresholds.clone_min_tokens)
    grouped: dict[tuple[str, object], list] = {}
    for p in pairs:
        grouped.setdefault((p.a.unit, p.a.span), []).append(p)
    out = []
    for (uid, span), ps in grouped.items():
        v = by_id[uid]
        tree = v.tree
        entity = _entity_at(tree, span)
        ev = {
            "tokens": max(p.tokens for p in ps),
            "partners": [{"path": by_id[p.b.unit].unit.path, "span": p.b.span.to_dict()} for p in ps],
        }
        score = min(1.0, ev["tokens"] / 120)
        out.append(Candidate(Rule.DUPLICATED_CODE, v.unit.path, span, tree.qualname(entity), entity.span, score, ev))
    return out


def _entity_at(tree, span):
    best = tree.root
    for _, n in tree.entities():
        if n.span.contains(span) and best.span.contains(n.span):
            best = n
    return best


def score_candidates(cands: list[Candidate], views: dict[str, UnitViews], config: ScanConfig) -> list[Finding]:
    out = []
    semantic_available = config.scorer is not None
    by_path = {x.unit.path: x for x in views.values()}
    for c in cands:
        v = by_path[c.path]
        if semantic_available:
            spans = [c.span]
            req = window_request(c.id, c.rule.value, spans, v.tokens, v.unit.lines, config.context_lines)
            sem = float(config.scorer.score(req))
        else:
            sem = 0.0
        conf = fuse(c.structural_score, sem, config.weights, c.rule, semantic_available)
        if emitted(conf, config.weights):
            out.append(Finding.from_candidate(c, sem, conf))
    return out


def scan_units(units: list[SourceUnit], config: ScanConfig | None = None) -> ScanResult:
    config = config or ScanConfig()
    result = ScanResult()
    for unit in sorted(units, key=lambda u: u.path):
        t0 = time.monotonic()
        try:
            views = build_views(unit)
        except ParseError as exc:
            result.skipped.append(SkippedUnit(unit.path, exc.span.start_line, exc.expected))
            continue
        result.views[unit.id] = views
        result.candidates.extend(unit_candidates(views, config))
        result.timings_ms[unit.path] = (time.monotonic() - t0) * 1000.0
    if Rule.DUPLICATED_CODE in config.enabled and result.views:
        t0 = time.monotonic()
        result.candidates.extend(clone_candidates(list(result.views.values()), config))
        result.timings_ms["<clones>"] = (time.monotonic() - t0) * 1000.0
    t0 = time.monotonic()
    findings = score_candidates(result.candidates, result.views, config)
    result.timings_ms["<scoring>"] = (time.monotonic() - t0) * 1000.0
    unique = {f.id: f for f in sorted(findings, key=Finding.sort_key)}
    result.findings = sorted(unique.values(), key=Finding.sort_key)
    result.scorer_fallbacks = list(getattr(config.scorer, "fallbacks", []))
    return result


def scan_unit(unit: SourceUnit, config: ScanConfig | None = None) -> ScanResult:
    return scan_units([unit], config)
