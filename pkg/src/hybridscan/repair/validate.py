"""Re-analysis of patched units."""

from __future__ import annotations

import os
import subprocess
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

from hybridscan.detection.model import Finding
from hybridscan.detection.scan import ScanConfig, scan_unit
from hybridscan.repair.patch import Patch, map_line
from hybridscan.representation import NormalizedAst, ParseError, SourceUnit, compute_metrics, parse

TEST_TIMEOUT_S = 300


@dataclass
class ValidationReport:
    parses_ok: bool
    target_cleared: bool
    new_findings: list[Finding] = field(default_factory=list)
    delta_cc: int = 0
    delta_cbo: int = 0
    delta_loc: int = 0
    test_exit_code: int | None = None
    findings_after: list[Finding] = field(default_factory=list)
    findings_before: list[Finding] = field(default_factory=list)

    @property
    def accepted(self) -> bool:
        # a test command's exit code is reported alongside, not folded in
        return self.parses_ok and self.target_cleared and not self.new_findings

    def to_dict(self) -> dict:
        return {
            "parsesOk": self.parses_ok,
            "targetCleared": self.target_cleared,
            "newFindings": [f.to_dict() for f in self.new_findings],
            "deltaCc": self.delta_cc,
            "deltaCbo": self.delta_cbo,
            "deltaLoc": self.delta_loc,
            "testExitCode": self.test_exit_code,
            "accepted": self.accepted,
        }


def _entity(tree: NormalizedAst, qualname: str):
    for q, n in tree.entities():
        if q == qualname:
            return n
    return None


def _entity_metrics(unit: SourceUnit, tree: NormalizedAst, qualname: str) -> tuple[int, int, int]:
    node = _entity(tree, qualname)
    if node is None:
        return 0, 0, unit.loc
    m = compute_metrics(tree, node, unit.text)
    return m.cc, m.cbo, m.loc


def _key(f: Finding, line: int) -> tuple[str, str, int]:
    return (f.rule.value, f.entity, line)


def run_test_command(command: str, after: SourceUnit) -> int:
    """Run ``command`` with the patched file available via HYBRIDSCAN_PATCHED_FILE."""
    with tempfile.TemporaryDirectory() as tmp:
        target = Path(tmp) / Path(after.path).name
        target.write_text(after.text, encoding="utf-8")
        env = dict(os.environ, HYBRIDSCAN_PATCHED_FILE=str(target), HYBRIDSCAN_ORIGINAL_PATH=after.path)
        try:
            proc = subprocess.run(command, shell=True, env=env, timeout=TEST_TIMEOUT_S,
                                  stdout=subprocess.DEVNULL, stderr=subprocess.DEVNULL)
        except subprocess.TimeoutExpired:
            return 124
        return proc.returncode


def validate(before: SourceUnit, after: SourceUnit, finding: Finding, config: ScanConfig | None = None,
             patch: Patch | None = None, test_command: str | None = None) -> ValidationReport:
    """Re-parse and re-scan ``after``; ``patch`` maps old lines to new ones for matching."""
    config = config or ScanConfig()
    try:
        after_tree = parse(after)
    except ParseError:
        return ValidationReport(parses_ok=False, target_cleared=False)
    before_tree = parse(before)
    found_before = scan_unit(before, config).findings
    found_after = scan_unit(after, config).findings

    def moved(line: int) -> int:
        return map_line(before.text, patch, line) if patch is not None else line

    before_keys = {_key(f, moved(f.span.start_line)) for f in found_before}
    target = _key(finding, moved(finding.span.start_line))
    cleared = not any(_key(f, f.span.start_line) == target for f in found_after)
    new = [f for f in found_after if _key(f, f.span.start_line) not in before_keys]

    cc0, cbo0, loc0 = _entity_metrics(before, before_tree, finding.entity)
    cc1, cbo1, loc1 = _entity_metrics(after, after_tree, finding.entity)
    report = ValidationReport(True, cleared, new, cc1 - cc0, cbo1 - cbo0, loc1 - loc0,
                              findings_after=found_after, findings_before=found_before)
    if test_command:
        report.test_exit_code = run_test_command(test_command, after)
    return report
