"""Finding, candidate and tunable-parameter types shared by the detectors."""

from __future__ import annotations

import hashlib
from dataclasses import asdict, dataclass, field, replace
from enum import Enum
from fnmatch import fnmatchcase
from typing import Any

from hybridscan.representation.source import Span


class Rule(str, Enum):
    LONG_METHOD = "LongMethod"
    GOD_CLASS = "GodClass"
    DATA_CLASS = "DataClass"
    FEATURE_ENVY = "FeatureEnvy"
    DUPLICATED_CODE = "DuplicatedCode"
    SQL_INJECTION = "SqlInjection"
    COMMAND_INJECTION = "CommandInjection"
    XSS = "Xss"
    HARDCODED_SECRET = "HardcodedSecret"

    def __str__(self) -> str:
        return self.value


RULE_CWE = {
    Rule.SQL_INJECTION: 89,
    Rule.COMMAND_INJECTION: 78,
    Rule.XSS: 79,
    Rule.HARDCODED_SECRET: 798,
}
CWE_RULE = {v: k for k, v in RULE_CWE.items() if k is not Rule.HARDCODED_SECRET}
VULNERABILITY_RULES = frozenset(RULE_CWE)
METHOD_RULES = frozenset({Rule.LONG_METHOD, Rule.FEATURE_ENVY, Rule.DUPLICATED_CODE})
CLASS_RULES = frozenset({Rule.GOD_CLASS, Rule.DATA_CLASS})


def finding_id(rule: Rule | str, path: str, span: Span) -> str:
    key = f"{Rule(rule).value}|{path}|{span.start_line}:{span.start_col}-{span.end_line}:{span.end_col}"
    return hashlib.sha256(key.encode()).hexdigest()[:16]


@dataclass(frozen=True)
class Candidate:
    rule: Rule
    path: str
    span: Span
    entity: str
    entity_span: Span
    structural_score: float
    evidence: dict[str, Any] = field(default_factory=dict)

    @property
    def id(self) -> str:
        return finding_id(self.rule, self.path, self.span)

    @property
    def cwe(self) -> int | None:
        return RULE_CWE.get(self.rule)


@dataclass(frozen=True)
class Finding:
    id: str
    rule: Rule
    path: str
    span: Span
    entity: str
    entity_span: Span
    structural_score: float
    semantic_score: float
    confidence: float
    cwe: int | None = None
    evidence: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_candidate(cls, c: Candidate, semantic: float, confidence: float) -> Finding:
        return cls(c.id, c.rule, c.path, c.span, c.entity, c.entity_span, c.structural_score,
                   semantic, confidence, c.cwe, c.evidence)

    def sort_key(self) -> tuple:
        return (self.path, self.span, self.rule.value)

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "rule": self.rule.value,
            "cwe": self.cwe,
            "path": self.path,
            "span": self.span.to_dict(),
            "entity": self.entity,
            "entitySpan": self.entity_span.to_dict(),
            "structuralScore": self.structural_score,
            "semanticScore": self.semantic_score,
            "confidence": self.confidence,
            "evidence": self.evidence,
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> Finding:
        return cls(
            id=d["id"], rule=Rule(d["rule"]), path=d["path"], span=Span.from_dict(d["span"]),
            entity=d["entity"], entity_span=Span.from_dict(d["entitySpan"]),
            structural_score=d["structuralScore"], semantic_score=d["semanticScore"],
            confidence=d["confidence"], cwe=d.get("cwe"), evidence=d.get("evidence", {}),
        )


@dataclass(frozen=True)
class Thresholds:
    long_method_nos: int = 30
    long_method_cc: int = 10
    god_class_nom: int = 15
    god_class_wmc: int = 47
    god_class_loc: int = 200
    god_class_cbo: int = 8
    data_class_accessor_ratio: float = 0.8
    data_class_fields: int = 3
    data_class_wmc_slack: int = 2
    feature_envy_foreign: int = 3
    clone_min_tokens: int = 30
    secret_min_length: int = 6
    entropy_min_length: int = 16
    entropy_bits: float = 3.5

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class FusionWeights:
    w_struct: float = 0.6
    w_sem: float = 0.4
    threshold: float = 0.5
    overrides: dict[str, tuple[float, float]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for ws, wl in [(self.w_struct, self.w_sem), *self.overrides.values()]:
            if not (0.0 <= ws <= 1.0 and 0.0 <= wl <= 1.0) or abs(ws + wl - 1.0) > 1e-9:
                raise ValueError(f"fusion weights must lie in [0,1] and sum to 1, got {(ws, wl)}")
        if not 0.0 < self.threshold < 1.0:
            raise ValueError("fusion threshold must lie in (0, 1)")

    def for_rule(self, rule: Rule | str) -> tuple[float, float]:
        return self.overrides.get(Rule(rule).value, (self.w_struct, self.w_sem))

    def with_rule(self, rule: Rule | str, w_struct: float, w_sem: float) -> FusionWeights:
        ov = dict(self.overrides)
        ov[Rule(rule).value] = (w_struct, w_sem)
        return replace(self, overrides=ov)

    def to_dict(self) -> dict[str, Any]:
        return {
            "wStruct": self.w_struct,
            "wSem": self.w_sem,
            "threshold": self.threshold,
            "overrides": {k: {"wStruct": v[0], "wSem": v[1]} for k, v in sorted(self.overrides.items())},
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> FusionWeights:
        ov = {k: (v["wStruct"], v["wSem"]) for k, v in d.get("overrides", {}).items()}
        return cls(d.get("wStruct", 0.6), d.get("wSem", 0.4), d.get("threshold", 0.5), ov)


DEFAULT_WEIGHTS = FusionWeights(overrides={Rule.HARDCODED_SECRET.value: (0.5, 0.5)})


def name_matches(pattern: str, name: str | None) -> bool:
    """Dot-free patterns match the last component of a dotted name; others match it whole."""
    if not name:
        return False
    if "." in pattern:
        return fnmatchcase(name, pattern)
    return fnmatchcase(name.rsplit(".", 1)[-1], pattern)


@dataclass(frozen=True)
class SourcePattern:
    kind: str  # "call" | "attr" | "param"
    pattern: str


@dataclass(frozen=True)
class SinkPattern:
    pattern: str
    cwe: int
    arg: int | None = None  # None: every argument is sensitive


@dataclass(frozen=True)
class TaintPolicy:
    sources: tuple[SourcePattern, ...]
    sinks: tuple[SinkPattern, ...]
    sanitizers: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.sources or not self.sinks:
            raise ValueError("taint policy needs at least one source and one sink")
        for s in self.sinks:
            if s.cwe not in CWE_RULE:
                raise ValueError(f"sink {s.pattern!r} maps to unsupported CWE {s.cwe}")

    def source_call(self, callee: str | None) -> bool:
        return any(s.kind == "call" and name_matches(s.pattern, callee) for s in self.sources)

    def source_attr(self, dotted: str | None) -> bool:
        return any(s.kind == "attr" and dotted is not None and fnmatchcase(dotted, s.pattern) for s in self.sources)

    def source_param(self, name: str) -> bool:
        return any(s.kind == "param" and fnmatchcase(name, s.pattern) for s in self.sources)

    def sink_for(self, callee: str | None) -> SinkPattern | None:
        for s in self.sinks:
            if name_matches(s.pattern, callee):
                return s
        return None

    def is_sanitizer(self, callee: str | None) -> bool:
        return any(name_matches(p, callee) for p in self.sanitizers)

    def to_dict(self) -> dict[str, Any]:
        return {
            "sources": [{"kind": s.kind, "pattern": s.pattern} for s in self.sources],
            "sinks": [{"pattern": s.pattern, "cwe": s.cwe, "arg": s.arg} for s in self.sinks],
            "sanitizers": list(self.sanitizers),
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> TaintPolicy:
        return cls(
            tuple(SourcePattern(s["kind"], s["pattern"]) for s in d["sources"]),
            tuple(SinkPattern(s["pattern"], s["cwe"], s.get("arg")) for s in d["sinks"]),
            tuple(d["sanitizers"]),
        )


DEFAULT_POLICY = TaintPolicy(
    sources=(
        *(SourcePattern("call", p) for p in (
            "input", "raw_input", "request_args", "request_param", "request_form", "get_param",
            "get_query_param", "read_request", "request.args.get", "request.form.get",
            "request.values.get", "request.cookies.get", "request.get_json", "*.getParameter",
        )),
        *(SourcePattern("attr", p) for p in (
            "request.args", "request.form", "request.values", "request.cookies", "request.data",
            "sys.argv", "os.environ",
        )),
        *(SourcePattern("param", p) for p in (
            "request", "req", "user_input", "untrusted_*", "raw_*", "*_from_user", "query_string",
        )),
    ),
    sinks=(
        SinkPattern("execute", 89, 0),
        SinkPattern("executemany", 89, 0),
        SinkPattern("executescript", 89, 0),
        SinkPattern("raw_query", 89, 0),
        SinkPattern("os_system", 78),
        SinkPattern("os.system", 78),
        SinkPattern("os.popen", 78),
        SinkPattern("subprocess.*", 78, 0),
        SinkPattern("run_shell", 78),
        SinkPattern("shell_exec", 78),
        SinkPattern("render_html", 79),
        SinkPattern("render_template_string", 79, 0),
        SinkPattern("html_response", 79),
        SinkPattern("make_response", 79),
        SinkPattern("write_html", 79),
    ),
    sanitizers=(
        "int", "float", "bool", "escape", "html.escape", "markupsafe.escape", "quote",
        "shlex.quote", "sanitize*", "bleach.clean", "clean_html",
    ),
)
