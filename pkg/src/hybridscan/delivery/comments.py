"""Markdown comment bodies for pull-request bots."""

from __future__ import annotations

from hybridscan.detection.model import Finding
from hybridscan.explanation.render import RULE_TITLES
from hybridscan.repair.suggest import RepairSuggestion
from hybridscan.representation import SourceUnit

DEFAULT_CAP = 50
NO_ISSUES = "No issues found by hybridscan."


def _section(f: Finding, explanation: str | None, top: RepairSuggestion | None, unit: SourceUnit | None) -> str:
    cwe = f" (CWE-{f.cwe})" if f.cwe is not None else ""
    lines = [
        f"### {RULE_TITLES[f.rule.value]}{cwe} in `{f.entity}`",
        "",
        f"`{f.path}` lines {f.span.start_line}-{f.span.end_line}, confidence **{f.confidence:.2f}**"
        f" (id `{f.id}`)",
        "",
    ]
    if explanation:
        lines += [explanation.rstrip(), ""]
    if top is not None:
        diff = top.diff(unit) if unit is not None else ""
        if diff:
            lines += ["Suggested repair: " + top.patch.description, "", "```diff", diff.rstrip("\n"), "```", ""]
        else:
            lines += ["Suggestion: " + top.patch.description, ""]
    return "\n".join(lines)


def render_pr_comment(findings: list[Finding], suggestions: dict[str, list[RepairSuggestion]] | None = None,
                      explanations: dict[str, str] | None = None, units: dict[str, SourceUnit] | None = None,
                      cap: int = DEFAULT_CAP) -> str:
    """One section per finding (in report order), at most ``cap`` of them plus an overflow line."""
    if cap < 1:
        raise ValueError("cap must be positive")
    if not findings:
        return NO_ISSUES + "\n"
    suggestions = suggestions or {}
    explanations = explanations or {}
    units = units or {}
    ordered = sorted(findings, key=lambda f: (f.sort_key(), f.id))
    parts = [f"## hybridscan: {len(ordered)} finding{'s' if len(ordered) != 1 else ''}", ""]
    for f in ordered[:cap]:
        ranked = suggestions.get(f.id) or []
        parts.append(_section(f, explanations.get(f.id), ranked[0] if ranked else None, units.get(f.path)))
    rest = len(ordered) - cap
    if rest > 0:
        parts.append(f"_{rest} more finding{'s' if rest != 1 else ''} not shown._")
    return "\n".join(parts).rstrip("\n") + "\n"
