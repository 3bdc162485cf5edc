import json

import pytest

from conftest import UNITS, views
from hybridscan.detection import Finding, Rule, scan_unit
from hybridscan.explanation import (
    AttributionKind, MissingEvidence, attribute, explanation_document, render_explanation,
    validate_explanation,
)
from hybridscan.representation import SourceUnit, Span

SPAN = Span(1, 1, 40, 10)


def metric_finding(metrics):
    return Finding("f1", Rule.LONG_METHOD, "t.py", SPAN, "f", SPAN, 0.6, 0.5, 0.56,
                   evidence={"metrics": metrics})


def kitchen():
    res = scan_unit(SourceUnit.from_path(UNITS / "security" / "kitchen_sink.py"))
    return res, next(iter(res.views.values()))


def test_taint_four_statements_uniform():
    v = views("def f(cursor):\n    a = request_args('a')\n    b = a + 'x'\n    c = b + 'y'\n    cursor.execute(c)\n")
    res = scan_unit(v.unit)
    [f] = [x for x in res.findings if x.rule is Rule.SQL_INJECTION]
    a = attribute(f, next(iter(res.views.values())))
    assert a.kind is AttributionKind.TAINT_PATH
    assert [i.weight for i in a.items] == pytest.approx([0.25] * 4)
    assert [i.label for i in a.items] == ["source", "flow", "flow", "sink"]


def test_zero_exceedance_excluded():
    a = attribute(metric_finding({"nos": {"value": 40, "threshold": 30}, "cc": {"value": 10, "threshold": 10}}))
    assert [(i.target, i.weight) for i in a.items] == [("nos", 1.0)]


def test_two_exceedances_hand_computed():
    a = attribute(metric_finding({"nos": {"value": 40, "threshold": 30}, "cc": {"value": 15, "threshold": 10}}))
    # (40-30)/30 = 1/3 and (15-10)/10 = 1/2 normalize to 0.4 and 0.6
    assert {i.target: i.weight for i in a.items} == pytest.approx({"nos": 0.4, "cc": 0.6})


def test_long_method_fixture_weights():
    res = scan_unit(SourceUnit.from_path(UNITS / "smells" / "long_method_import.py"))
    [f] = res.findings
    a = attribute(f)
    assert [(i.target, i.weight) for i in a.items] == [("cc", 1.0)]


def test_secret_literal_weight():
    res, v = kitchen()
    f = next(x for x in res.findings if x.rule is Rule.HARDCODED_SECRET)
    a = attribute(f, v)
    assert [(i.label, i.weight) for i in a.items] == [("literal", 1.0)]


def test_clone_halves():
    res = scan_unit(SourceUnit.from_path(UNITS / "clones" / "small_pair.py"))
    [f] = [x for x in res.findings if x.rule is Rule.DUPLICATED_CODE]
    assert [i.weight for i in attribute(f).items] == [0.5, 0.5]


def test_missing_evidence():
    f = Finding("x", Rule.SQL_INJECTION, "t.py", SPAN, "f", SPAN, 1.0, 1.0, 1.0, cwe=89)
    with pytest.raises(MissingEvidence):
        attribute(f)


def test_markdown_lists_flow():
    res, v = kitchen()
    f = next(x for x in res.findings if x.rule is Rule.SQL_INJECTION)
    md = render_explanation(f, attribute(f, v), "markdown")
    assert "source at line 10" in md and "flow at line 11" in md and "sink at line 12" in md
    assert render_explanation(f, attribute(f, v), "markdown") == md


def test_json_round_trip():
    res, v = kitchen()
    for f in res.findings:
        doc = json.loads(render_explanation(f, attribute(f, v), "json"))
        validate_explanation(doc)
        assert doc == explanation_document(f, attribute(f, v))
        assert Finding.from_dict(doc["finding"]) == f


def test_unknown_format():
    res, v = kitchen()
    f = res.findings[0]
    with pytest.raises(ValueError):
        render_explanation(f, attribute(f, v), "html")
