"""Suggestion generation, validation and ranking."""

from __future__ import annotations

from dataclasses import dataclass, replace

from hybridscan.detection.model import Finding, Rule
from hybridscan.detection.scan import ScanConfig
from hybridscan.evaluation.risk import DEFAULT_RISK_TABLE, RiskTable, total_risk
from hybridscan.repair.extract import NoExtractableRegion, candidate_regions, extract_method, helper_name
from hybridscan.repair.patch import Patch, PatchKind, apply_patch, edit_chars, unified_diff
from hybridscan.repair.query import UnsupportedShape, parameterize_query, quote_command
from hybridscan.repair.secret import relocate_secret
from hybridscan.repair.validate import ValidationReport, validate
from hybridscan.representation import SourceUnit, UnitViews

ADVICE = {
    Rule.GOD_CLASS: "Split the class along its responsibilities; move cohesive method groups into collaborators.",
    Rule.DATA_CLASS: "Move behaviour that manipulates these fields into the class itself.",
    Rule.FEATURE_ENVY: "Move the method (or the envious part of it) to the class whose data it uses.",
    Rule.DUPLICATED_CODE: "Factor the repeated region into one shared function and call it from both places.",
    Rule.XSS: "Escape untrusted values before they reach the HTML output, or render through an autoescaping template.",
    Rule.SQL_INJECTION: "Pass untrusted values as bound query parameters instead of building the SQL text.",
    Rule.COMMAND_INJECTION: "Quote untrusted values or pass an argument list instead of a shell string.",
    Rule.LONG_METHOD: "Split the function into smaller steps.",
    Rule.HARDCODED_SECRET: "Load the secret from the environment or a secret store.",
}


@dataclass(frozen=True)
class RepairSuggestion:
    finding_id: str
    patch: Patch
    rank: int
    validation: ValidationReport | None = None
    risk_reduction: float = 0.0

    def after(self, unit: SourceUnit) -> SourceUnit:
        return SourceUnit.from_text(apply_patch(unit.text, self.patch), unit.path, unit.language)

    def diff(self, unit: SourceUnit) -> str:
        if self.patch.advisory:
            return ""
        return unified_diff(unit.text, apply_patch(unit.text, self.patch), unit.path)

    def to_dict(self, unit: SourceUnit | None = None) -> dict:
        d = {"findingId": self.finding_id, "rank": self.rank, "patch": self.patch.to_dict(),
             "riskReduction": self.risk_reduction,
             "validation": self.validation.to_dict() if self.validation else None}
        if unit is not None:
            d["diff"] = self.diff(unit)
        return d


def advisory(finding: Finding, reason: str = "") -> Patch:
    text = ADVICE[finding.rule] + (f" ({reason})" if reason else "")
    return Patch((), text, PatchKind.ADVISORY)


def _function_view(views: UnitViews, finding: Finding):
    for fv in views.functions.values():
        if fv.node.span == finding.entity_span and fv.qualname == finding.entity:
            return fv
    return None


def suggest(finding: Finding, views: UnitViews) -> list[RepairSuggestion]:
    """Unvalidated suggestions in generation order."""
    unit, tree = views.unit, views.tree
    patches: list[Patch] = []
    if finding.rule is Rule.LONG_METHOD:
        fv = _function_view(views, finding)
        if fv is not None:
            taken = 1
            for region in candidate_regions(unit, tree, fv.node):
                try:
                    patch, _ = extract_method(unit, tree, fv, region, helper_name(tree, fv.node, taken))
                except NoExtractableRegion:
                    continue
                patches.append(patch)
                taken += 1
    elif finding.rule is Rule.HARDCODED_SECRET:
        patches.append(relocate_secret(unit, tree, finding))
    elif finding.rule in (Rule.SQL_INJECTION, Rule.COMMAND_INJECTION):
        fv = _function_view(views, finding)
        fix = parameterize_query if finding.rule is Rule.SQL_INJECTION else quote_command
        try:
            if fv is None:
                raise UnsupportedShape("finding is outside any function")
            patches.append(fix(unit, tree, fv, finding))
        except UnsupportedShape as exc:
            patches.append(advisory(finding, str(exc)))
    else:
        patches.append(advisory(finding))
    return [RepairSuggestion(finding.id, p, i) for i, p in enumerate(patches, 1)]


def validate_suggestion(s: RepairSuggestion, unit: SourceUnit, finding: Finding, config: ScanConfig,
                        table: RiskTable = DEFAULT_RISK_TABLE, test_command: str | None = None) -> RepairSuggestion:
    if s.patch.advisory:
        return s
    report = validate(unit, s.after(unit), finding, config, s.patch, test_command)
    gain = total_risk(report.findings_before, table) - total_risk(report.findings_after, table) if report.parses_ok else 0.0
    return replace(s, validation=report, risk_reduction=round(gain, 9))


def rank(suggestions: list[RepairSuggestion], unit: SourceUnit) -> list[RepairSuggestion]:
    """Accepted first, then larger risk reduction, smaller edits, and patch hash."""
    def key(s: RepairSuggestion):
        accepted = s.validation is not None and s.validation.accepted
        return (not accepted, -s.risk_reduction, edit_chars(unit.text, s.patch), s.patch.digest())

    ordered = sorted(suggestions, key=key)
    return [replace(s, rank=i) for i, s in enumerate(ordered, 1)]


def repair(finding: Finding, views: UnitViews, config: ScanConfig | None = None,
           table: RiskTable = DEFAULT_RISK_TABLE, test_command: str | None = None) -> list[RepairSuggestion]:
    """Suggest, validate and rank repairs for one finding."""
    config = config or ScanConfig()
    validated = [validate_suggestion(s, views.unit, finding, config, table, test_command)
                 for s in suggest(finding, views)]
    return rank(validated, views.unit) if validated else []
