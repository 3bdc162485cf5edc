import io
import json

import pytest

from conftest import UNITS
from hybridscan.delivery import (
    CONFIG_ENV, ConfigError, FeedbackLog, FeedbackRecord, NO_ISSUES, ToolConfig, UnknownFinding, Verdict,
    emit_sarif, dump_sarif, filter_changed, load_config, parse_diff, record_feedback, render_pr_comment,
    replay, update_weights,
)
from hybridscan.delivery.changes import DiffParseError
from hybridscan.delivery.cli import run_cli
from hybridscan.detection import DEFAULT_WEIGHTS, FusionWeights, Rule, scan_unit
from hybridscan.detection.model import Finding
from hybridscan.repair.suggest import repair
from hybridscan.representation import SourceUnit, Span, build_views


def fnd(rule=Rule.SQL_INJECTION, lo=10, hi=12, conf=0.9, path="app.py", cwe=89, fid=None):
    span = Span(lo, 5, hi, 20)
    return Finding(fid or f"{rule.value}-{path}-{lo}", rule, path, span, "handler", span, conf, conf, conf, cwe)


def rec(verdict, rule=Rule.SQL_INJECTION, n=0):
    return FeedbackRecord(f"2026-01-01T00:00:{n:02d}+00:00", f"id{n}", rule, Verdict(verdict))


# configuration

def test_unknown_key_rejected():
    with pytest.raises(ConfigError) as exc:
        ToolConfig.from_dict({"colour": "red"})
    assert "colour" in str(exc.value)


def test_bad_type_points_at_key():
    with pytest.raises(ConfigError) as exc:
        ToolConfig.from_dict({"thresholds": {"LongMethod": {"nos": "many"}}})
    assert exc.value.pointer == "/thresholds/LongMethod/nos"


def test_weights_must_sum_to_one():
    with pytest.raises(ConfigError):
        ToolConfig.from_dict({"fusion": {"wStruct": 0.7, "wSem": 0.4}})


def test_config_round_trip():
    cfg = ToolConfig.from_dict({"thresholds": {"LongMethod": {"nos": 12}}, "failOn": "warning"})
    assert cfg.thresholds.long_method_nos == 12 and cfg.fail_on == "warning"
    assert ToolConfig.from_dict(cfg.to_dict()) == cfg


def test_env_points_at_config(tmp_path):
    p = tmp_path / "cfg.json"
    p.write_text(json.dumps({"failOn": "info"}))
    assert load_config(env={CONFIG_ENV: str(p)}).fail_on == "info"
    assert load_config(env={}).fail_on == "error"


def test_explicit_path_beats_env(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    a.write_text(json.dumps({"failOn": "info"}))
    b.write_text(json.dumps({"failOn": "warning"}))
    assert load_config(str(a), env={CONFIG_ENV: str(b)}).fail_on == "info"


def test_flag_beats_file(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"format": "json"}))
    out = io.StringIO()
    code = run_cli(["scan", str(UNITS / "clean" / "shapes.py"), "--config", str(cfg), "--format", "sarif",
                    "--state-dir", str(tmp_path / "st")], out, io.StringIO())
    assert code == 0
    assert json.loads(out.getvalue())["version"] == "2.1.0"


# SARIF

def test_sarif_empty():
    doc = emit_sarif([])
    assert doc["version"] == "2.1.0" and doc["runs"][0]["results"] == []


def test_sarif_region():
    res = emit_sarif([fnd()])["runs"][0]["results"]
    assert len(res) == 1
    region = res[0]["locations"][0]["physicalLocation"]["region"]
    assert (region["startLine"], region["endLine"]) == (10, 12)
    assert res[0]["ruleId"] == "SqlInjection" and res[0]["level"] == "error"


def test_sarif_level_cutoff():
    assert emit_sarif([fnd(conf=0.79)])["runs"][0]["results"][0]["level"] == "warning"
    assert emit_sarif([fnd(conf=0.8)])["runs"][0]["results"][0]["level"] == "error"


def sarif_checklist(doc):
    """Required-field checklist for the emitted SARIF subset; returns the missing items."""
    missing = []
    if doc.get("version") != "2.1.0":
        missing.append("version")
    runs = doc.get("runs")
    if not isinstance(runs, list) or not runs:
        return missing + ["runs"]
    driver = runs[0].get("tool", {}).get("driver", {})
    if not driver.get("name"):
        missing.append("driver.name")
    rules = driver.get("rules")
    if not isinstance(rules, list):
        missing.append("driver.rules")
        rules = []
    ids = [r.get("id") for r in rules]
    for i, r in enumerate(runs[0].get("results", [])):
        if r.get("ruleId") not in ids:
            missing.append(f"results[{i}].ruleId")
        if "ruleIndex" in r and ids[r["ruleIndex"]] != r.get("ruleId"):
            missing.append(f"results[{i}].ruleIndex")
        if r.get("level") not in ("error", "warning", "note", "none"):
            missing.append(f"results[{i}].level")
        if not r.get("message", {}).get("text"):
            missing.append(f"results[{i}].message")
        locs = r.get("locations") or []
        if not locs:
            missing.append(f"results[{i}].locations")
        for loc in locs:
            phys = loc.get("physicalLocation", {})
            region = phys.get("region", {})
            if not phys.get("artifactLocation", {}).get("uri"):
                missing.append(f"results[{i}].uri")
            if not (1 <= region.get("startLine", 0) <= region.get("endLine", 0)):
                missing.append(f"results[{i}].region")
    return missing


def test_sarif_fixture_checklist():
    res = scan_unit(SourceUnit.from_path(UNITS / "security" / "kitchen_sink.py"))
    doc = json.loads(dump_sarif(emit_sarif(res.findings)))
    assert len(doc["runs"][0]["results"]) == len(res.findings) > 0
    assert sarif_checklist(doc) == []


def test_sarif_deterministic():
    res = scan_unit(SourceUnit.from_path(UNITS / "security" / "kitchen_sink.py"))
    assert dump_sarif(emit_sarif(res.findings)) == dump_sarif(emit_sarif(list(reversed(res.findings))))


# PR comment

def test_comment_no_issues():
    assert render_pr_comment([]).strip() == NO_ISSUES
    assert "\n" not in render_pr_comment([]).strip()


def test_comment_with_diff():
    u = SourceUnit.from_path(UNITS / "security" / "sql_three_step.py")
    res = scan_unit(u)
    sql = [f for f in res.findings if f.rule is Rule.SQL_INJECTION][0]
    views = build_views(u)
    text = render_pr_comment([sql], {sql.id: repair(sql, views)}, units={u.path: u})
    assert text.count("### ") == 1
    assert "```diff" in text and "\n+" in text and "\n-" in text
    assert f"{sql.confidence:.2f}" in text


def test_comment_cap_overflow():
    findings = [fnd(lo=i, hi=i, fid=f"f{i:02d}") for i in range(1, 61)]
    text = render_pr_comment(findings, cap=50)
    assert text.count("### ") == 50
    assert "10 more" in text.strip().splitlines()[-1]


# changed-files mode

DIFF_A = """--- a/a.py
+++ b/a.py
@@ -5,4 +5,5 @@
 x = 1
-y = 2
+y = 3
+z = 4
 w = 5
 v = 6
"""


def test_empty_diff():
    kept, changed = filter_changed(["a.py", "b.py"], "")
    assert kept == [] and changed.paths == []


def test_diff_excludes_untouched():
    kept, changed = filter_changed(["a.py", "b.py"], DIFF_A)
    assert kept == ["a.py"]
    assert changed.hunks == {"a.py": [(5, 9)]}


def test_hunk_intersection():
    changed = parse_diff(DIFF_A)
    assert changed.in_diff(fnd(lo=7, hi=7, path="a.py"))
    assert not changed.in_diff(fnd(lo=12, hi=13, path="a.py"))
    assert changed.in_diff(fnd(lo=2, hi=5, path="a.py"))
    assert not changed.in_diff(fnd(lo=7, hi=7, path="b.py"))


def test_hunk_intersection_oracle():
    changed = parse_diff(DIFF_A)
    lines = set(range(5, 10))
    for lo in range(1, 14):
        for hi in range(lo, 14):
            assert changed.in_diff(fnd(lo=lo, hi=hi, path="a.py")) == bool(lines & set(range(lo, hi + 1)))


def test_malformed_hunk():
    with pytest.raises(DiffParseError):
        parse_diff("--- a/a.py\n+++ b/a.py\n@@ -1,3 +1,3 @@\n x\n")


# feedback

def test_feedback_append(tmp_path):
    log = FeedbackLog(str(tmp_path / "fb.jsonl"))
    record_feedback(log, rec("accepted"), ["id0"])
    assert len(log.read()) == 1
    record_feedback(log, rec("rejected"), ["id0"])
    assert len(log.read()) == 2


def test_feedback_unknown(tmp_path):
    log = FeedbackLog(str(tmp_path / "fb.jsonl"))
    with pytest.raises(UnknownFinding):
        record_feedback(log, rec("accepted", n=3), ["id0"])
    assert log.read() == []


def test_feedback_replay(tmp_path):
    records = [rec("accepted", n=0), rec("rejected", Rule.LONG_METHOD, 1), rec("rejected", n=0),
               rec("accepted", Rule.HARDCODED_SECRET, 2), rec("accepted", n=3)]
    log = FeedbackLog(str(tmp_path / "fb.jsonl"))
    for r in records:
        log.append(r)
    direct = replay(records)
    again = log.state()
    assert again == direct
    assert again.latest["id0"] is Verdict.REJECTED
    assert again.counts["SqlInjection"] == {"accepted": 2, "rejected": 1}


def test_weights_fixed_point():
    records = [rec("accepted" if i % 2 else "rejected", n=i) for i in range(10)]
    assert update_weights(records, DEFAULT_WEIGHTS) == DEFAULT_WEIGHTS


def test_weights_all_accepted():
    w = update_weights([rec("accepted", n=i) for i in range(5)], DEFAULT_WEIGHTS)
    assert w.for_rule(Rule.SQL_INJECTION) == pytest.approx((0.55, 0.45))
    assert w.for_rule(Rule.LONG_METHOD) == (0.6, 0.4)


def test_weights_minimum_evidence():
    assert update_weights([rec("accepted", n=i) for i in range(3)], DEFAULT_WEIGHTS) == DEFAULT_WEIGHTS


def test_weights_trailing_window():
    old = [rec("rejected", n=i % 60) for i in range(60)]
    new = [rec("accepted", n=i % 60) for i in range(50)]
    w = update_weights(old + new, DEFAULT_WEIGHTS)
    assert w.for_rule(Rule.SQL_INJECTION)[1] == pytest.approx(0.45)


def test_weights_clamped():
    w = FusionWeights(0.12, 0.88)
    assert update_weights([rec("accepted", n=i) for i in range(5)], w).for_rule(Rule.SQL_INJECTION)[1] == pytest.approx(0.9)


# CLI

def cli(args, tmp_path):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli(args + ["--state-dir", str(tmp_path / "state")], out, err)
    return code, out.getvalue(), err.getvalue()


def test_cli_clean(tmp_path):
    code, out, _ = cli(["scan", str(UNITS / "clean")], tmp_path)
    assert code == 0


def test_cli_kitchen_sink(tmp_path):
    code, out, _ = cli(["scan", str(UNITS / "security" / "kitchen_sink.py"), "--fail-on", "warning",
                        "--format", "json"], tmp_path)
    assert code == 1
    assert len(json.loads(out)["findings"]) == 7


def test_cli_unknown_flag(tmp_path):
    err = io.StringIO()
    assert run_cli(["scan", "--bogus", "x.py"], io.StringIO(), err) == 2
    assert "--bogus" in err.getvalue()


def test_cli_missing_path(tmp_path):
    code, _, err = cli(["scan", str(tmp_path / "nope.py")], tmp_path)
    assert code == 2 and err


def test_cli_fail_on_soundness(tmp_path):
    # exit 1 iff some finding meets the fail-on level
    path = str(UNITS / "security" / "kitchen_sink.py")
    code, out, _ = cli(["scan", path, "--format", "json", "--fail-on", "error"], tmp_path)
    levels = {"error" if f["finding"]["confidence"] >= 0.8 else "warning"
              for f in json.loads(out)["findings"]}
    assert code == (1 if "error" in levels else 0)


def test_cli_output_deterministic(tmp_path):
    path = str(UNITS / "security" / "kitchen_sink.py")
    a = cli(["scan", path, "--format", "sarif"], tmp_path)[1]
    b = cli(["scan", path, "--format", "sarif"], tmp_path)[1]
    assert a == b


def test_cli_feedback_flow(tmp_path):
    path = str(UNITS / "security" / "kitchen_sink.py")
    code, out, _ = cli(["scan", path, "--format", "json"], tmp_path)
    fid = json.loads(out)["findings"][0]["finding"]["id"]
    assert cli(["feedback", fid, "accepted"], tmp_path)[0] == 0
    code, _, err = cli(["feedback", "nope", "accepted"], tmp_path)
    assert code == 2 and "unknown finding" in err
    lines = (tmp_path / "state" / "feedback.jsonl").read_text().splitlines()
    assert len(lines) == 1 and json.loads(lines[0])["findingId"] == fid


def test_cli_explain(tmp_path):
    path = str(UNITS / "security" / "kitchen_sink.py")
    out = cli(["scan", path, "--format", "json"], tmp_path)[1]
    fid = json.loads(out)["findings"][0]["finding"]["id"]
    code, text, _ = cli(["explain", fid], tmp_path)
    assert code == 0 and "CWE-798" in text and "line 5" in text


def copy_fixture(tmp_path, rel):
    target = tmp_path / "work" / rel.rsplit("/", 1)[-1]
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text((UNITS / rel).read_text())
    return target


def test_cli_fix_branch_dir(tmp_path):
    target = copy_fixture(tmp_path, "risk/account_api.py")
    original = target.read_text()
    assert cli(["scan", str(target)], tmp_path)[0] == 1
    branch = tmp_path / "branch"
    code, out, _ = cli(["fix", "--branch-dir", str(branch)], tmp_path)
    assert code == 0 and "applied 4 patches" in out
    assert target.read_text() == original
    patched = (branch / target.relative_to(target.anchor)).read_text()
    assert "os.getenv" in patched and "shlex.quote" in patched
    assert "+++ b/" in (branch / "changes.diff").read_text()
    summary = json.loads((branch / "summary.json").read_text())
    assert len(summary["applied"]) == 4


def test_cli_fix_interactive_records_feedback(tmp_path):
    target = copy_fixture(tmp_path, "security/secrets_config.py")
    cli(["scan", str(target)], tmp_path)
    answers = iter(["a", "r", "q"])
    out = io.StringIO()
    code = run_cli(["fix", "--interactive", "--state-dir", str(tmp_path / "state")], out, io.StringIO(),
                   prompt=lambda q: next(answers))
    assert code == 0
    log = FeedbackLog(str(tmp_path / "state" / "feedback.jsonl")).read()
    assert [r.verdict for r in log] == [Verdict.ACCEPTED, Verdict.REJECTED]
    assert "applied 1 patch to 1 file" in out.getvalue()


def test_branch_path_stays_inside(tmp_path):
    from hybridscan.delivery.cli import branch_path
    assert branch_path("out", "pkg/a.py") == "out/pkg/a.py"
    assert branch_path("out", "../../etc/a.py") == "out/etc/a.py"
    assert branch_path("out", "/abs/elsewhere/a.py").startswith("out/")
