"""SARIF 2.1.0 output for CI consumers."""

from __future__ import annotations

import json
from dataclasses import dataclass

from hybridscan import __version__
from hybridscan.detection.model import RULE_CWE, Finding, Rule
from hybridscan.explanation.render import RULE_TITLES

SARIF_VERSION = "2.1.0"
SARIF_SCHEMA = "https://json.schemastore.org/sarif-2.1.0.json"
ERROR_CONFIDENCE = 0.8


@dataclass(frozen=True)
class ToolMeta:
    name: str = "hybridscan"
    version: str = __version__
    information_uri: str = "https://example.invalid/hybridscan"


def level(finding: Finding) -> str:
    return "error" if finding.confidence >= ERROR_CONFIDENCE else "warning"


def _rule_descriptor(rule: Rule) -> dict:
    desc = {
        "id": rule.value,
        "name": rule.value,
        "shortDescription": {"text": RULE_TITLES[rule.value]},
        "properties": {"tags": ["security" if rule in RULE_CWE else "maintainability"]},
    }
    if rule in RULE_CWE:
        desc["properties"]["cwe"] = f"CWE-{RULE_CWE[rule]}"
    return desc


def _message(f: Finding) -> str:
    cwe = f" (CWE-{f.cwe})" if f.cwe is not None else ""
    return f"{RULE_TITLES[f.rule.value]}{cwe} in {f.entity}, confidence {f.confidence:.2f}"


def emit_sarif(findings: list[Finding], tool: ToolMeta | None = None) -> dict:
    """Build a SARIF document; rules[] lists every rule so indices are stable across scans."""
    tool = tool or ToolMeta()
    rules = list(Rule)
    index = {r: i for i, r in enumerate(rules)}
    results = []
    for f in sorted(findings, key=lambda f: (f.sort_key(), f.id)):
        results.append({
            "ruleId": f.rule.value,
            "ruleIndex": index[f.rule],
            "level": level(f),
            "message": {"text": _message(f)},
            "locations": [{
                "physicalLocation": {
                    "artifactLocation": {"uri": f.path},
                    "region": {
                        "startLine": f.span.start_line,
                        "startColumn": f.span.start_col,
                        "endLine": f.span.end_line,
                        # SARIF end columns are exclusive
                        "endColumn": f.span.end_col + 1,
                    },
                },
                "logicalLocations": [{"fullyQualifiedName": f.entity}],
            }],
            "partialFingerprints": {"hybridscanId/v1": f.id},
            "properties": {"confidence": f.confidence, "structuralScore": f.structural_score,
                           "semanticScore": f.semantic_score},
        })
    return {
        "$schema": SARIF_SCHEMA,
        "version": SARIF_VERSION,
        "runs": [{
            "tool": {"driver": {"name": tool.name, "version": tool.version,
                                "informationUri": tool.information_uri,
                                "rules": [_rule_descriptor(r) for r in rules]}},
            "results": results,
        }],
    }


def dump_sarif(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
