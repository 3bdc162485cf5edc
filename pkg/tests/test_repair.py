import pytest

from conftest import UNITS, unit, views
from hybridscan.detection import Rule, ScanConfig, scan_unit
from hybridscan.repair import (
    Edit, NoExtractableRegion, OutOfBounds, OverlappingEdits, Patch, PatchKind, Region,
    RepairSuggestion, ValidationReport, apply_patch, candidate_regions, env_key, extract_method,
    rank, region_signature, repair, suggest, validate,
)
from hybridscan.representation import SourceUnit, Span, build_views


def scan_file(rel):
    res = scan_unit(SourceUnit.from_path(UNITS / rel))
    return res, next(iter(res.views.values()))


def finding(res, rule, line=None):
    return next(f for f in res.findings if f.rule is rule and (line is None or f.span.start_line == line))


def top(res, v, f):
    return repair(f, v, ScanConfig())[0]


# patches

def test_empty_patch_identity():
    assert apply_patch("a = 1\n", Patch((), "noop", PatchKind.EXTRACT_METHOD)) == "a = 1\n"


def test_single_replacement():
    p = Patch((Edit(Span(1, 5, 1, 5), "2"),), "r", PatchKind.EXTRACT_METHOD)
    assert apply_patch("a = 1\n", p) == "a = 2\n"


def test_two_edits_compose():
    text = "x = alpha + beta\n"
    e1, e2 = Edit(Span(1, 5, 1, 9), "A"), Edit(Span(1, 13, 1, 16), "B")
    both = apply_patch(text, Patch((e2, e1), "two", PatchKind.EXTRACT_METHOD))
    # apply the later edit first so the earlier span stays valid
    step = apply_patch(apply_patch(text, Patch((e2,), "b", PatchKind.EXTRACT_METHOD)),
                       Patch((e1,), "a", PatchKind.EXTRACT_METHOD))
    assert both == step == "x = A + B\n"


def test_overlapping_edits():
    p = Patch((Edit(Span(1, 1, 1, 3), "a"), Edit(Span(1, 2, 1, 4), "b")), "o", PatchKind.EXTRACT_METHOD)
    with pytest.raises(OverlappingEdits):
        apply_patch("abcdef\n", p)


def test_out_of_bounds():
    with pytest.raises(OutOfBounds):
        apply_patch("a\n", Patch((Edit(Span(9, 1, 9, 1), "x"),), "oob", PatchKind.EXTRACT_METHOD))


# secrets

def test_relocate_password():
    res = scan_unit(unit('password = "hunter2"\n'))
    [s] = suggest(res.findings[0], next(iter(res.views.values())))
    after = apply_patch(res.views["t.py"].unit.text, s.patch)
    assert after == 'import os\npassword = os.getenv("PASSWORD")\n'
    assert s.patch.notes == ("provision environment variable PASSWORD",)


def test_env_key_casing():
    assert env_key("api_key", 1) == "API_KEY"
    assert env_key("signingSeed", 1) == "SIGNING_SEED"
    assert env_key(None, 7) == "SECRET_LINE_7"


def test_entropy_target_key():
    res, v = scan_file("security/secret_entropy_target.py")
    s = top(res, v, res.findings[0])
    assert "UPSTREAM_SIGNATURE" in s.patch.description


def test_relocate_validates():
    res, v = scan_file("security/kitchen_sink.py")
    s = top(res, v, finding(res, Rule.HARDCODED_SECRET, 5))
    assert s.validation.accepted and s.validation.target_cleared
    assert s.validation.delta_loc in (0, 1)


# injections

def test_single_fragment_rewrite():
    src = "def f(db):\n    uid = request_args('id')\n    db.execute(\"SELECT * FROM u WHERE id=\" + uid)\n"
    res = scan_unit(unit(src))
    s = top(res, res.views["t.py"], res.findings[0])
    assert s.patch.kind is PatchKind.PARAMETERIZE_QUERY and s.validation.accepted
    assert 'db.execute("SELECT * FROM u WHERE id=?", (uid,))' in apply_patch(src, s.patch)


def test_two_fragments_in_order():
    src = ("def f(db):\n    a = request_args('a')\n    b = request_args('b')\n"
           "    db.execute(\"SELECT * FROM t WHERE a='\" + a + \"' AND b='\" + b + \"'\")\n")
    res = scan_unit(unit(src))
    s = top(res, res.views["t.py"], res.findings[0])
    assert 'db.execute("SELECT * FROM t WHERE a=? AND b=?", (a, b))' in apply_patch(src, s.patch)


def test_three_statement_builder():
    res, v = scan_file("security/sql_three_step.py")
    s = top(res, v, res.findings[0])
    after = apply_patch(v.unit.text, s.patch)
    assert s.validation.accepted
    assert 'query = "SELECT id FROM users WHERE name = ? AND active = 1"' in after
    assert "db.execute(query, (name,))" in after


def test_percent_format_binds_all_values():
    res, v = scan_file("security/sql_percent.py")
    after = apply_patch(v.unit.text, top(res, v, res.findings[0]).patch)
    assert "cursor.execute(sql, (year, month))" in after


def test_unsupported_shape_is_advisory():
    res, v = scan_file("security/sql_nocue.py")
    s = top(res, v, res.findings[0])
    assert s.patch.advisory and s.validation is None


def test_command_quoting():
    res, v = scan_file("security/cmd_ping.py")
    s = top(res, v, res.findings[0])
    assert s.validation.accepted and "shlex.quote(host)" in apply_patch(v.unit.text, s.patch)


# advisory rules

def test_god_class_advisory_only():
    res, v = scan_file("smells/god_class_inventory.py")
    [s] = suggest(finding(res, Rule.GOD_CLASS), v)
    assert s.patch.kind is PatchKind.ADVISORY and s.patch.edits == ()


# extract method

def fn_view(v, name):
    return next(f for f in v.functions.values() if f.qualname == name)


def test_two_extractable_blocks():
    res, v = scan_file("smells/long_method_orders.py")
    ranked = repair(finding(res, Rule.LONG_METHOD), v, ScanConfig())
    accepted = [s for s in ranked if s.validation and s.validation.accepted]
    assert len(accepted) == 2


def test_signature_params_and_returns():
    src = ("def f(a):\n    x = a + 1\n    y = x * 2\n    y = y + x\n    z = y - 1\n    return z\n")
    v = views(src)
    fv = fn_view(v, "f")
    body = fv.node.get("body")
    sig = region_signature(v.tree, fv, Region(tuple(body[1:4])))
    assert sig.params == ("x",) and sig.returns == ("z",)


def test_signature_closed_region():
    src = "def f():\n    print(1)\n    print(2)\n    return 0\n"
    v = views(src)
    fv = fn_view(v, "f")
    sig = region_signature(v.tree, fv, Region(tuple(fv.node.get("body")[:2])))
    assert sig.params == () and sig.returns == ()


def test_escaping_return_rejected():
    src = "def f(a):\n    if a:\n        b = 1\n        return b\n    return 0\n"
    v = views(src)
    fv = fn_view(v, "f")
    region = Region(tuple(fv.node.get("body")[0].get("body")))
    with pytest.raises(NoExtractableRegion):
        extract_method(v.unit, v.tree, fv, region, "_f_part1")


def test_large_helper_rejected():
    body = "".join(f"    v{i} = a + {i}\n" for i in range(34))
    src = "def f(a):\n" + body + "    return v33\n"
    u = unit(src)
    # without a semantic scorer confidence equals the structural score, so any metric breach is reported
    cfg = ScanConfig(scorer=None)
    res = scan_unit(u, cfg)
    target = finding(res, Rule.LONG_METHOD)
    v = build_views(u)
    fv = fn_view(v, "f")
    region = Region(tuple(fv.node.get("body")[1:34]))
    patch, _ = extract_method(u, v.tree, fv, region, "_f_part1")
    report = validate(u, SourceUnit.from_text(apply_patch(src, patch), "t.py"), target, cfg)
    assert report.parses_ok and report.target_cleared and not report.accepted
    assert Rule.LONG_METHOD in {f.rule for f in report.new_findings}


@pytest.mark.parametrize("rel", ["smells/long_method_orders.py", "smells/long_method_import.py",
                                 "smells/long_method_search.py", "smells/long_method_sync.py"])
def test_extraction_lowers_cc(rel):
    res, v = scan_file(rel)
    s = top(res, v, finding(res, Rule.LONG_METHOD))
    assert s.validation.accepted and s.validation.delta_cc <= -1


# ranking

def suggestion(desc, accepted, risk, text="x"):
    p = Patch((Edit(Span(1, 1, 1, 1), text),), desc, PatchKind.EXTRACT_METHOD)
    report = ValidationReport(True, accepted)
    return RepairSuggestion("f", p, 0, report, risk)


def test_rank_accepted_first():
    big = suggestion("big", True, 0.0, "y" * 500)
    small = suggestion("small", False, 9.0)
    assert [s.patch.description for s in rank([small, big], unit("a = 1\n"))] == ["big", "small"]


def test_rank_smaller_edit_first():
    a = suggestion("long", True, 1.0, "xxxx")
    b = suggestion("short", True, 1.0, "x")
    ranked = rank([a, b], unit("a = 1\n"))
    assert [s.patch.description for s in ranked] == ["short", "long"]
    assert [s.rank for s in ranked] == [1, 2]


def test_rank_tie_by_digest():
    a = suggestion("p", True, 1.0, "x")
    b = suggestion("q", True, 1.0, "y")
    first = [s.patch.description for s in rank([a, b], unit("a = 1\n"))]
    assert first == [s.patch.description for s in rank([b, a], unit("a = 1\n"))]
    assert first[0] == min((a, b), key=lambda s: s.patch.digest()).patch.description
