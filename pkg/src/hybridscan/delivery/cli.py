"""Command-line entry point: scan, explain, fix, eval and feedback."""

from __future__ import annotations

import argparse
import contextlib
import hashlib
import json
import os
import sys
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Callable, TextIO

from hybridscan import __version__
from hybridscan.delivery.changes import ChangedFiles, DiffParseError, filter_changed
from hybridscan.delivery.comments import render_pr_comment
from hybridscan.delivery.config import (
    FAIL_LEVELS, OUTPUT_FORMATS, ConfigError, ToolConfig, load_config,
)
from hybridscan.delivery.feedback import (
    FeedbackLog, FeedbackLogError, FeedbackRecord, UnknownFinding, Verdict, now_iso, record_feedback,
    update_weights,
)
from hybridscan.delivery.sarif import dump_sarif, emit_sarif, level
from hybridscan.detection.model import Finding, FusionWeights, Rule
from hybridscan.detection.scan import ScanResult, scan_units
from hybridscan.evaluation.corpus import ManifestSchemaError, load_corpus
from hybridscan.evaluation.harness import evaluate
from hybridscan.evaluation.split import PARTS, RatioError, stratified_split
from hybridscan.explanation.attribution import MissingEvidence, attribute
from hybridscan.explanation.render import explanation_document, render_explanation
from hybridscan.repair.patch import unified_diff
from hybridscan.repair.suggest import RepairSuggestion, repair
from hybridscan.representation import ParseError, SourceUnit, build_views
from hybridscan.representation.source import UnsupportedLanguage

EXIT_CLEAN, EXIT_FINDINGS, EXIT_ERROR = 0, 1, 2
LAST_SCAN = "last-scan.json"
FEEDBACK_LOG = "feedback.jsonl"
SOURCE_SUFFIXES = (".py",)
_LEVEL_RANK = {"info": 0, "warning": 1, "error": 2}


class CliError(Exception):
    """Operational failure reported on stderr with exit code 2."""


# ---------------------------------------------------------------- helpers


def _posix(path: Path) -> str:
    try:
        return path.resolve().relative_to(Path.cwd().resolve()).as_posix()
    except ValueError:
        return path.as_posix()


def collect_targets(paths: list[str], state_dir: str) -> list[str]:
    """Source files named directly or found under named directories, sorted and deduplicated."""
    out: set[str] = set()
    skip = Path(state_dir).resolve()
    for raw in paths:
        p = Path(raw)
        if not p.exists():
            raise CliError(f"no such file or directory: {raw}")
        if p.is_dir():
            for f in p.rglob("*"):
                rel = f.relative_to(p).parts
                if f.suffix in SOURCE_SUFFIXES and f.is_file() and not any(part.startswith(".") for part in rel) \
                        and skip not in f.resolve().parents:
                    out.add(_posix(f))
        else:
            out.add(_posix(p))
    return sorted(out)


def load_units(targets: list[str], err: TextIO) -> list[SourceUnit]:
    units = []
    for t in targets:
        try:
            units.append(SourceUnit.from_path(t))
        except UnsupportedLanguage as exc:
            print(f"hybridscan: skipping {t}: {exc}", file=err)
        except (OSError, UnicodeDecodeError) as exc:
            raise CliError(f"cannot read {t}: {exc}") from None
    return units


def learned_weights(config: ToolConfig) -> FusionWeights:
    log = FeedbackLog(os.path.join(config.state_dir, FEEDBACK_LOG))
    try:
        return update_weights(log.read(), config.weights)
    except FeedbackLogError as exc:
        raise CliError(str(exc)) from None


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def meets(finding: Finding, fail_on: str) -> bool:
    return _LEVEL_RANK[level(finding)] >= _LEVEL_RANK[fail_on]


def explain_all(result: ScanResult) -> dict[str, dict]:
    """Attribution documents keyed by finding id."""
    views = {v.unit.path: v for v in result.views.values()}
    docs = {}
    for f in result.findings:
        try:
            docs[f.id] = explanation_document(f, attribute(f, views.get(f.path)))
        except MissingEvidence:
            docs[f.id] = {"finding": f.to_dict(), "attribution": None}
    return docs


def scan_json(result: ScanResult, in_diff: dict[str, bool] | None = None) -> str:
    """Deterministic JSON report: no timings, sorted keys, findings in report order."""
    docs = explain_all(result)
    items = []
    for f in result.findings:
        doc = dict(docs[f.id])
        doc["level"] = level(f)
        if in_diff is not None:
            doc["inDiff"] = in_diff.get(f.id, False)
        items.append(doc)
    by_rule: dict[str, int] = {}
    for f in result.findings:
        by_rule[f.rule.value] = by_rule.get(f.rule.value, 0) + 1
    report = {
        "tool": {"name": "hybridscan", "version": __version__},
        "findings": items,
        "skipped": [s.to_dict() for s in result.skipped],
        "summary": {"findings": len(result.findings), "byRule": by_rule,
                    "units": len(result.views), "loc": result.total_loc},
    }
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def scan_text(result: ScanResult, in_diff: dict[str, bool] | None = None) -> str:
    lines = []
    for f in result.findings:
        cwe = f" CWE-{f.cwe}" if f.cwe is not None else ""
        tag = " [in-diff]" if in_diff and in_diff.get(f.id) else ""
        lines.append(f"{f.path}:{f.span.start_line}:{f.span.start_col}: {level(f)} {f.rule.value}{cwe} "
                     f"in {f.entity} (confidence {f.confidence:.2f}) [{f.id}]{tag}")
    for s in result.skipped:
        lines.append(f"{s.path}:{s.line}: skipped ({s.reason})")
    n = len(result.findings)
    lines.append(f"{n} finding{'s' if n != 1 else ''} in {len(result.views)} file{'s' if len(result.views) != 1 else ''}")
    return "\n".join(lines) + "\n"


@dataclass
class LastScan:
    findings: list[Finding]
    digests: dict[str, str]

    def to_dict(self) -> dict:
        return {"findings": [f.to_dict() for f in self.findings], "digests": dict(sorted(self.digests.items()))}

    @classmethod
    def load(cls, state_dir: str) -> LastScan:
        path = os.path.join(state_dir, LAST_SCAN)
        if not os.path.exists(path):
            raise CliError(f"no previous scan in {state_dir}; run `hybridscan scan` first")
        with open(path, encoding="utf-8") as fh:
            d = json.load(fh)
        return cls([Finding.from_dict(x) for x in d["findings"]], d["digests"])

    def find(self, finding_id: str) -> Finding:
        for f in self.findings:
            if f.id == finding_id:
                return f
        raise UnknownFinding(finding_id)

    def unit(self, path: str) -> SourceUnit:
        try:
            unit = SourceUnit.from_path(path)
        except OSError as exc:
            raise CliError(f"cannot read {path}: {exc}") from None
        if self.digests.get(path) != _digest(unit.text):
            raise CliError(f"{path} changed since the last scan; scan it again")
        return unit


def branch_path(branch_dir: str, path: str) -> str:
    """Location of a patched copy; absolute and parent-relative paths stay inside ``branch_dir``."""
    p = Path(path)
    if p.is_absolute():
        try:
            p = p.relative_to(Path.cwd())
        except ValueError:
            p = p.relative_to(p.anchor)
    parts = [part for part in p.parts if part not in ("..", ".")]
    return os.path.join(branch_dir, *parts)


def _write(path: str, text: str) -> None:
    parent = os.path.dirname(path)
    if parent:
        os.makedirs(parent, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


# ---------------------------------------------------------------- subcommands


def _effective_config(args: argparse.Namespace) -> ToolConfig:
    config = load_config(args.config)
    if getattr(args, "state_dir", None):
        config = replace(config, state_dir=args.state_dir)
    return config


def cmd_scan(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    config = _effective_config(args)
    overrides = {}
    if args.format:
        overrides["format"] = args.format
    if args.fail_on:
        overrides["fail_on"] = args.fail_on
    if args.rules:
        try:
            overrides["enabled"] = frozenset(Rule(r.strip()) for r in args.rules.split(",") if r.strip())
        except ValueError as exc:
            raise CliError(f"--rules: {exc}") from None
    if args.scorer:
        overrides["scorer_kind"] = args.scorer
    if args.scorer_command:
        overrides["scorer_command"] = args.scorer_command
        overrides.setdefault("scorer_kind", "external")
    config = replace(config, **overrides)
    weights = config.weights if args.no_feedback else learned_weights(config)

    targets = collect_targets(args.paths, config.state_dir)
    changed: ChangedFiles | None = None
    if args.changed_from:
        try:
            with open(args.changed_from, encoding="utf-8") as fh:
                targets, changed = filter_changed(targets, fh.read())
        except OSError as exc:
            raise CliError(f"cannot read diff: {exc}") from None
    units = load_units(targets, err)
    scan_config = config.scan_config(weights)
    try:
        result = scan_units(units, scan_config)
    finally:
        close = getattr(scan_config.scorer, "close", None)
        if close:
            close()
    for fb in result.scorer_fallbacks:
        print(f"hybridscan: semantic plugin fell back to lexical scoring ({fb.get('reason', 'error')})", file=err)
    in_diff = {f.id: changed.in_diff(f) for f in result.findings} if changed is not None else None

    if config.format == "json":
        rendered = scan_json(result, in_diff)
    elif config.format == "sarif":
        rendered = dump_sarif(emit_sarif(result.findings))
    else:
        rendered = scan_text(result, in_diff)

    # single writer phase after analysis
    digests = {v.unit.path: _digest(v.unit.text) for v in result.views.values()}
    _write(os.path.join(config.state_dir, LAST_SCAN),
           json.dumps(LastScan(result.findings, digests).to_dict(), indent=2, sort_keys=True) + "\n")
    if args.pr_comment:
        comment = render_pr_comment(result.findings, cap=config.pr_comment_cap,
                                    explanations=_markdown_explanations(result))
        _write(args.pr_comment, comment)
    if args.output:
        _write(args.output, rendered)
    else:
        out.write(rendered)
    return EXIT_FINDINGS if any(meets(f, config.fail_on) for f in result.findings) else EXIT_CLEAN


def _markdown_explanations(result: ScanResult) -> dict[str, str]:
    views = {v.unit.path: v for v in result.views.values()}
    out = {}
    for f in result.findings:
        try:
            out[f.id] = render_explanation(f, attribute(f, views.get(f.path)), "markdown")
        except MissingEvidence:
            continue
    return out


def cmd_explain(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    config = _effective_config(args)
    last = LastScan.load(config.state_dir)
    finding = last.find(args.finding_id)
    views = build_views(last.unit(finding.path))
    out.write(render_explanation(finding, attribute(finding, views), args.format))
    return EXIT_CLEAN


def _signature(unit: SourceUnit, f: Finding) -> tuple[str, str, str]:
    lines = unit.lines
    first = lines[f.span.start_line - 1].strip() if f.span.start_line <= len(lines) else ""
    return (f.rule.value, f.entity, first)


@dataclass
class FixOutcome:
    path: str
    before: str
    after: str
    applied: list[tuple[str, str]] = field(default_factory=list)  # (original finding id, description)
    feedback: list[FeedbackRecord] = field(default_factory=list)


Prompt = Callable[[str], str]


def fix_unit(unit: SourceUnit, targets: list[Finding], config: ToolConfig, weights: FusionWeights,
             mode: str, out: TextIO, prompt: Prompt | None = None, test_command: str | None = None) -> FixOutcome:
    """Repair ``targets`` in one file, re-scanning after each applied patch."""
    scan_config = config.scan_config(weights)
    wanted = {_signature(unit, f): f for f in targets}
    done: set[tuple[str, str, str]] = set()
    outcome = FixOutcome(unit.path, unit.text, unit.text)
    current = unit
    while True:
        views = build_views(current)
        found = scan_units([current], scan_config).findings
        pending = [f for f in found if _signature(current, f) in wanted and _signature(current, f) not in done]
        if not pending:
            break
        f = pending[0]
        sig = _signature(current, f)
        done.add(sig)
        original = wanted[sig]
        ranked = repair(f, views, scan_config, config.risk, test_command)
        top = ranked[0] if ranked else None
        if mode == "dry-run" or mode == "interactive":
            out.write(render_explanation(f, attribute(f, views), "text"))
            _describe(top, current, out)
        if top is None or top.patch.advisory:
            continue
        if mode == "interactive":
            answer = _ask(prompt, "apply this patch? [a]ccept / [r]eject / [s]kip / [q]uit: ")
            if answer == "q":
                break
            if answer in ("a", "r"):
                verdict = Verdict.ACCEPTED if answer == "a" else Verdict.REJECTED
                outcome.feedback.append(FeedbackRecord(now_iso(), original.id, original.rule, verdict))
            if answer != "a":
                continue
        elif mode != "apply" or not (top.validation and top.validation.accepted):
            continue
        current = top.after(current)
        outcome.applied.append((original.id, top.patch.description))
    outcome.after = current.text
    return outcome


def _describe(top: RepairSuggestion | None, unit: SourceUnit, out: TextIO) -> None:
    if top is None:
        out.write("  no repair available\n\n")
        return
    if top.patch.advisory:
        out.write(f"  suggestion: {top.patch.description}\n\n")
        return
    v = top.validation
    status = "accepted" if v and v.accepted else "not accepted"
    out.write(f"  patch ({status}): {top.patch.description}\n")
    if v:
        out.write(f"  re-analysis: parses={v.parses_ok} cleared={v.target_cleared} "
                  f"new={len(v.new_findings)} deltaCc={v.delta_cc} deltaLoc={v.delta_loc}\n")
    out.write(top.diff(unit) + "\n")


def _ask(prompt: Prompt | None, question: str) -> str:
    try:
        answer = (prompt or input)(question).strip().lower()
    except EOFError:
        return "q"
    return answer[:1] if answer else "s"


def cmd_fix(args: argparse.Namespace, out: TextIO, err: TextIO, prompt: Prompt | None = None) -> int:
    config = _effective_config(args)
    last = LastScan.load(config.state_dir)
    if args.finding_ids:
        targets = [last.find(i) for i in args.finding_ids]
    else:
        targets = list(last.findings)
    if args.interactive:
        mode = "interactive"
    elif args.apply_best or args.branch_dir:
        mode = "apply"
    else:
        mode = "dry-run"
    weights = learned_weights(config)
    by_path: dict[str, list[Finding]] = {}
    for f in targets:
        by_path.setdefault(f.path, []).append(f)
    outcomes = []
    for path in sorted(by_path):
        outcomes.append(fix_unit(last.unit(path), by_path[path], config, weights, mode, out, prompt,
                                 args.test_command))

    # single writer phase
    changed = [o for o in outcomes if o.after != o.before]
    log = FeedbackLog(os.path.join(config.state_dir, FEEDBACK_LOG))
    known = [f.id for f in last.findings]
    for o in outcomes:
        for r in o.feedback:
            record_feedback(log, r, known)
    if mode != "dry-run":
        if args.branch_dir:
            diffs = []
            for o in changed:
                _write(branch_path(args.branch_dir, o.path), o.after)
                diffs.append(unified_diff(o.before, o.after, o.path))
            _write(os.path.join(args.branch_dir, "changes.diff"), "".join(diffs))
            _write(os.path.join(args.branch_dir, "summary.json"), json.dumps(
                {"applied": [{"path": o.path, "findingId": i, "description": d}
                             for o in changed for i, d in o.applied]}, indent=2, sort_keys=True) + "\n")
        else:
            for o in changed:
                _write(o.path, o.after)
    n = sum(len(o.applied) for o in outcomes)
    where = f" into {args.branch_dir}" if args.branch_dir else ""
    if mode != "dry-run":
        out.write(f"applied {n} patch{'es' if n != 1 else ''} to {len(changed)} file"
                  f"{'s' if len(changed) != 1 else ''}{where}\n")
    return EXIT_CLEAN


def cmd_eval(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    config = _effective_config(args)
    corpus = load_corpus(args.corpus)
    for u in corpus.flagged:
        print(f"hybridscan: flagged {u.path}: {u.error}", file=err)
    paths = None
    split = None
    if args.part != "all":
        split = stratified_split(corpus, args.seed)
        paths = set(split.part(args.part))
    report = evaluate(corpus, config.scan_config(), paths)
    doc = report.to_dict()
    doc["seed"] = args.seed
    doc["part"] = args.part
    if args.format == "json":
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
        return EXIT_CLEAN
    m = report.metrics

    def fmt(x):
        return "n/a" if x is None else f"{x:.3f}"

    out.write(f"{'category':<18}{'tp':>5}{'fp':>5}{'fn':>5}{'tn':>6}  {'prec':>6} {'rec':>6} {'f1':>6} {'acc':>6}\n")
    rows = sorted(m.per_category.items()) + [("pooled", m.pooled)]
    for name, cm in rows:
        c = cm.counts
        out.write(f"{name:<18}{c.tp:>5}{c.fp:>5}{c.fn:>5}{c.tn:>6}  {fmt(cm.precision):>6} {fmt(cm.recall):>6} "
                  f"{fmt(cm.f1):>6} {fmt(cm.accuracy):>6}\n")
    cov = "n/a" if m.coverage_percent is None else f"{m.coverage_percent:.1f}%"
    out.write(f"coverage {cov}; {m.total_loc} LOC; runtime {fmt(m.runtime_ms_per_kloc)} ms/kLOC\n")
    return EXIT_CLEAN


def cmd_feedback(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    config = _effective_config(args)
    last = LastScan.load(config.state_dir)
    finding = last.find(args.finding_id)
    log = FeedbackLog(os.path.join(config.state_dir, FEEDBACK_LOG))
    record_feedback(log, FeedbackRecord(now_iso(), finding.id, finding.rule, Verdict(args.verdict)),
                    [f.id for f in last.findings])
    ws, wl = update_weights(log.read(), config.weights).for_rule(finding.rule)
    out.write(f"recorded {args.verdict} for {finding.id}; {finding.rule.value} weights now "
              f"structural {ws:.2f}, semantic {wl:.2f}\n")
    return EXIT_CLEAN


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON config file (default: $HYBRIDSCAN_CONFIG)")
    common.add_argument("--state-dir", help="directory for scan state and the feedback log")

    parser = argparse.ArgumentParser(prog="hybridscan", description="Hybrid code-smell and vulnerability scanner.")
    parser.add_argument("--version", action="version", version=f"hybridscan {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("scan", parents=[common], help="scan files or directories")
    p.add_argument("paths", nargs="+")
    p.add_argument("--format", choices=OUTPUT_FORMATS)
    p.add_argument("--changed-from", metavar="DIFFFILE", help="only scan files named in this unified diff")
    p.add_argument("--fail-on", choices=FAIL_LEVELS)
    p.add_argument("--output", "-o", help="write the report here instead of stdout")
    p.add_argument("--pr-comment", metavar="FILE", help="also write a pull-request comment body")
    p.add_argument("--rules", help="comma-separated rules to enable")
    p.add_argument("--scorer", choices=("lexical", "external", "none"))
    p.add_argument("--scorer-command", help="external semantic scorer command")
    p.add_argument("--no-feedback", action="store_true", help="ignore weights learned from feedback")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("explain", parents=[common], help="explain a finding from the last scan")
    p.add_argument("finding_id")
    p.add_argument("--format", choices=("text", "markdown", "json"), default="text")
    p.set_defaults(func=cmd_explain)

    p = sub.add_parser("fix", parents=[common], help="suggest and apply repairs for the last scan")
    p.add_argument("finding_ids", nargs="*")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--interactive", action="store_true", help="accept or reject each patch at a prompt")
    mode.add_argument("--apply-best", action="store_true", help="apply the top accepted patch in place")
    p.add_argument("--branch-dir", metavar="DIR", help="write patched copies and diffs here instead")
    p.add_argument("--test-command", help="run after patching; HYBRIDSCAN_PATCHED_FILE names the patched copy")
    p.set_defaults(func=cmd_fix)

    p = sub.add_parser("eval", parents=[common], help="evaluate against a labeled corpus")
    p.add_argument("--corpus", required=True, metavar="MANIFEST")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--part", choices=("all", *PARTS), default="all")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("feedback", parents=[common], help="record accept/reject feedback")
    p.add_argument("finding_id")
    p.add_argument("verdict", choices=[v.value for v in Verdict])
    p.set_defaults(func=cmd_feedback)
    return parser


def run_cli(argv: list[str] | None = None, out: TextIO | None = None, err: TextIO | None = None,
            prompt: Prompt | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(out):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CLEAN if exc.code == 0 else EXIT_ERROR
    try:
        if args.func is cmd_fix:
            return cmd_fix(args, out, err, prompt)
        return args.func(args, out, err)
    except UnknownFinding as exc:
        print(f"hybridscan: unknown finding id {exc.args[0]}", file=err)
    except (CliError, ConfigError, DiffParseError, ManifestSchemaError, RatioError, FeedbackLogError,
            ParseError, MissingEvidence, OSError, json.JSONDecodeError) as exc:
        print(f"hybridscan: {exc}", file=err)
    return EXIT_ERROR


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
