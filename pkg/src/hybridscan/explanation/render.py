"""Text, markdown and JSON renderings of a finding and its attribution."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources
from typing import Any

import jsonschema

from hybridscan.detection.model import Finding
from hybridscan.explanation.attribution import Attribution, AttributionKind
from hybridscan.representation import UnknownFormat

FORMATS = ("text", "markdown", "json")

RULE_TITLES = {
    "LongMethod": "Long Method",
    "GodClass": "God Class",
    "DataClass": "Data Class",
    "FeatureEnvy": "Feature Envy",
    "DuplicatedCode": "Duplicated Code",
    "SqlInjection": "SQL injection",
    "CommandInjection": "OS command injection",
    "Xss": "Cross-site scripting",
    "HardcodedSecret": "Hard-coded secret",
}


@lru_cache(maxsize=1)
def explanation_schema() -> dict[str, Any]:
    text = resources.files("hybridscan.explanation").joinpath("data/explanation.schema.json").read_text("utf-8")
    return json.loads(text)


def validate_explanation(doc: dict[str, Any]) -> None:
    jsonschema.validate(doc, explanation_schema())


def _title(f: Finding) -> str:
    t = RULE_TITLES[f.rule.value]
    return f"{t} (CWE-{f.cwe})" if f.cwe else t


def _lines(span) -> str:
    if span.start_line == span.end_line:
        return f"line {span.start_line}"
    return f"lines {span.start_line}-{span.end_line}"


def _reason(f: Finding, a: Attribution) -> list[str]:
    ev = f.evidence
    if a.kind is AttributionKind.TAINT_PATH:
        out = [f"Untrusted data reaches `{ev.get('sink', '?')}` without sanitization:"]
        for it in a.items:
            out.append(f"{it.label} at {_lines(it.span)} (weight {it.weight:.2f})")
        return out
    if a.kind is AttributionKind.METRIC_EXCEEDANCE:
        out = []
        for it in a.items:
            m = ev["metrics"][it.target]
            out.append(f"{it.target} = {m['value']} against threshold {m['threshold']} (weight {it.weight:.2f})")
        if "receiver" in ev:
            out.append(f"most accesses go to `{ev['receiver']}`; own accesses: {ev.get('ownAccesses', 0)}")
        return out
    if a.kind is AttributionKind.CLONE_PAIR:
        region, partner = a.items
        return [f"{ev.get('tokens')} normalized tokens at {_lines(region.span)} repeat in "
                f"{partner.path} at {_lines(partner.span)}"]
    why = "its assignment target looks like a credential" if ev.get("trigger") == "name" else \
        f"its entropy is {ev.get('entropy', 0):.2f} bits/char"
    return [f"String literal at {_lines(a.items[0].span)} is flagged because {why}."]


def explanation_document(finding: Finding, attribution: Attribution) -> dict[str, Any]:
    return {"finding": finding.to_dict(), "attribution": attribution.to_dict()}


def render_explanation(finding: Finding, attribution: Attribution, format: str = "text") -> str:
    if format not in FORMATS:
        raise UnknownFormat(format)
    if format == "json":
        doc = explanation_document(finding, attribution)
        validate_explanation(doc)
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    head = f"{_title(finding)} in {finding.entity} ({finding.path}, {_lines(finding.span)})"
    score = (f"confidence {finding.confidence:.2f} "
             f"(structural {finding.structural_score:.2f}, semantic {finding.semantic_score:.2f})")
    reasons = _reason(finding, attribution)
    if format == "markdown":
        body = [f"**{head}**", "", score, ""]
        if attribution.kind is AttributionKind.TAINT_PATH:
            body.append(reasons[0])
            body.extend(f"{i}. {r}" for i, r in enumerate(reasons[1:], 1))
        else:
            body.extend(f"- {r}" for r in reasons)
        return "\n".join(body) + "\n"
    return "\n".join([head, score, *("  " + r for r in reasons)]) + "\n"
