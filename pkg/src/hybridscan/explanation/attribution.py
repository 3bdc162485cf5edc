"""Evidence-derived attributions.

Weights come straight from the detector evidence, so the same finding always
gets the same attribution.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any

from hybridscan.detection.model import Finding, Rule, VULNERABILITY_RULES
from hybridscan.representation import Span, UnitViews


class AttributionKind(str, Enum):
    TAINT_PATH = "taint-path"
    METRIC_EXCEEDANCE = "metric-exceedance"
    CLONE_PAIR = "clone-pair"
    LITERAL = "literal"


class MissingEvidence(ValueError):
    """The finding's evidence payload cannot support an attribution."""


@dataclass(frozen=True)
class AttributionItem:
    target: int | str | Span  # statement id, metric name, or token span
    weight: float
    span: Span
    path: str
    label: str = ""

    def to_dict(self) -> dict[str, Any]:
        if isinstance(self.target, Span):
            target: Any = {"span": self.target.to_dict()}
        elif isinstance(self.target, int):
            target = {"statement": self.target}
        else:
            target = {"metric": self.target}
        return {"target": target, "weight": self.weight, "span": self.span.to_dict(),
                "path": self.path, "label": self.label}

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> AttributionItem:
        t = d["target"]
        if "span" in t:
            target: int | str | Span = Span.from_dict(t["span"])
        elif "statement" in t:
            target = int(t["statement"])
        else:
            target = t["metric"]
        return cls(target, d["weight"], Span.from_dict(d["span"]), d["path"], d.get("label", ""))


@dataclass(frozen=True)
class Attribution:
    finding_id: str
    kind: AttributionKind
    items: tuple[AttributionItem, ...]

    @property
    def total(self) -> float:
        return sum(i.weight for i in self.items)

    def to_dict(self) -> dict[str, Any]:
        return {"findingId": self.finding_id, "kind": self.kind.value,
                "items": [i.to_dict() for i in self.items]}

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> Attribution:
        return cls(d["findingId"], AttributionKind(d["kind"]),
                   tuple(AttributionItem.from_dict(i) for i in d["items"]))


def _uniform(n: int) -> list[float]:
    # the last weight absorbs rounding so the sum is exact
    w = [1.0 / n] * n
    w[-1] = 1.0 - sum(w[:-1])
    return w


def _normalize(raw: list[float]) -> list[float]:
    total = sum(raw)
    w = [r / total for r in raw]
    w[-1] = 1.0 - sum(w[:-1])
    return w


def exceedance(value: float, threshold: float) -> float:
    """Relative amount by which ``value`` exceeds ``threshold`` (0 when it does not)."""
    if threshold <= 0:
        return float(value > threshold)
    return max((value - threshold) / threshold, 0.0)


def _taint(f: Finding, views: UnitViews | None) -> Attribution:
    paths = f.evidence.get("paths")
    if not paths:
        raise MissingEvidence(f"{f.rule.value} finding {f.id} has no taint path")
    stmts: list[int] = []
    spans: dict[int, Span] = {}
    for p in paths:
        for sid, sp in zip(p["stmts"], p["spans"]):
            if sid not in spans:
                stmts.append(sid)
                spans[sid] = Span.from_dict(sp)
    if views is not None:
        for sid in stmts:
            if views.tree.node(sid).span != spans[sid]:
                raise MissingEvidence(f"statement {sid} no longer matches its recorded span")
    stmts.sort(key=lambda s: (spans[s], s))
    sink = paths[0]["stmts"][-1]
    sources = {p["stmts"][0] for p in paths}

    def label(s: int) -> str:
        if s == sink:
            return "sink"
        return "source" if s in sources else "flow"

    items = tuple(AttributionItem(s, w, spans[s], f.path, label(s)) for s, w in zip(stmts, _uniform(len(stmts))))
    return Attribution(f.id, AttributionKind.TAINT_PATH, items)


def _metrics(f: Finding) -> Attribution:
    metrics = f.evidence.get("metrics")
    if not metrics:
        raise MissingEvidence(f"{f.rule.value} finding {f.id} has no metric evidence")
    names = sorted(metrics)
    raw = [exceedance(metrics[n]["value"], metrics[n]["threshold"]) for n in names]
    if sum(raw) > 0:
        keep = [(n, r) for n, r in zip(names, raw) if r > 0]
        weights = _normalize([r for _, r in keep])
        chosen = [n for n, _ in keep]
    else:
        # rules firing on >= can hold with zero exceedance; share weight across the metrics
        chosen = names
        weights = _uniform(len(chosen))
    items = tuple(AttributionItem(n, w, f.entity_span, f.path, f"{n}={metrics[n]['value']} vs {metrics[n]['threshold']}")
                  for n, w in zip(chosen, weights))
    return Attribution(f.id, AttributionKind.METRIC_EXCEEDANCE, items)


def _clone(f: Finding) -> Attribution:
    partners = f.evidence.get("partners")
    if not partners:
        raise MissingEvidence(f"clone finding {f.id} has no partner region")
    p = partners[0]
    other = Span.from_dict(p["span"])
    items = (
        AttributionItem(f.span, 0.5, f.span, f.path, "region"),
        AttributionItem(other, 0.5, other, p["path"], "partner"),
    )
    return Attribution(f.id, AttributionKind.CLONE_PAIR, items)


def _literal(f: Finding) -> Attribution:
    if "literal" not in f.evidence:
        raise MissingEvidence(f"secret finding {f.id} has no literal")
    return Attribution(f.id, AttributionKind.LITERAL, (AttributionItem(f.span, 1.0, f.span, f.path, "literal"),))


def attribute(finding: Finding, views: UnitViews | None = None) -> Attribution:
    """Attribution for one finding; ``views`` lets taint statements be checked against the tree."""
    if finding.rule is Rule.HARDCODED_SECRET:
        return _literal(finding)
    if finding.rule in VULNERABILITY_RULES:
        return _taint(finding, views)
    if finding.rule is Rule.DUPLICATED_CODE:
        return _clone(finding)
    return _metrics(finding)
