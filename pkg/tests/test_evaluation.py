import itertools
import json
import logging

import pytest

from conftest import MANIFEST
from hybridscan.detection import Finding, Rule
from hybridscan.evaluation import (
    Band, ConfusionCounts, CorpusUnit, EmptyKnownList, Label, ManifestSchemaError, RatioError,
    accuracy, allocate, band, coverage, f1_score, load_corpus, match_findings, precision, recall,
    risk_report, stratified_split, stratum, validate_manifest,
)
from hybridscan.representation import Span

def fnd(rule, path, lo, hi, cwe=None, fid=None):
    span = Span(lo, 1, hi, 1)
    return Finding(fid or f"{rule.value}{path}{lo}{hi}", rule, path, span, "f", span, 1.0, 1.0, 1.0, cwe)


def lab(rule, path, lo, hi, cwe=None):
    return Label(path, rule, lo, hi, cwe)


# metrics

def test_f1_hybrid_row():
    assert round(f1_score(0.93, 0.91), 2) == 0.92


def test_f1_sonar_row():
    assert round(f1_score(0.78, 0.71), 2) == 0.74


def test_counts_formulas():
    c = ConfusionCounts(tp=3, fp=1, fn=1, tn=5)
    assert (accuracy(c), precision(c), recall(c)) == (0.8, 0.75, 0.75)


def test_undefined_ratios_are_none():
    assert precision(ConfusionCounts()) is None and f1_score(None, 0.5) is None


def test_coverage_values():
    known = [lab(Rule.SQL_INJECTION, "a.py", i, i, 89) for i in range(1, 21)]
    hits = [fnd(Rule.SQL_INJECTION, "a.py", i, i, 89) for i in range(1, 18)]
    assert coverage(hits, known) == 85.0
    assert coverage([], known) == 0.0
    with pytest.raises(EmptyKnownList):
        coverage(hits, [])


def test_coverage_counts_duplicates_once():
    known = [lab(Rule.SQL_INJECTION, "a.py", 3, 3, 89), lab(Rule.SQL_INJECTION, "a.py", 9, 9, 89)]
    dup = [fnd(Rule.SQL_INJECTION, "a.py", 3, 3, 89, "x"), fnd(Rule.SQL_INJECTION, "a.py", 3, 3, 89, "y")]
    assert coverage(dup, known) == 50.0


# matching

def test_match_exact():
    m = match_findings([fnd(Rule.LONG_METHOD, "a.py", 4, 20)], [lab(Rule.LONG_METHOD, "a.py", 4, 20)])
    assert m.per_category["LongMethod"].tp == 1


def test_match_wrong_function():
    m = match_findings([fnd(Rule.LONG_METHOD, "a.py", 30, 40)], [lab(Rule.LONG_METHOD, "a.py", 4, 20)])
    c = m.per_category["LongMethod"]
    assert (c.tp, c.fp, c.fn) == (0, 1, 1)


def test_match_one_to_one():
    preds = [fnd(Rule.LONG_METHOD, "a.py", 4, 20, fid="a"), fnd(Rule.LONG_METHOD, "a.py", 5, 18, fid="b")]
    c = match_findings(preds, [lab(Rule.LONG_METHOD, "a.py", 4, 20)]).per_category["LongMethod"]
    assert (c.tp, c.fp, c.fn) == (1, 1, 0)


# corpus

def test_bundled_manifest():
    doc = json.loads(MANIFEST.read_text())
    corpus = load_corpus(MANIFEST)
    assert len(corpus.units) == len(doc["units"])
    assert len(corpus.labels) == sum(len(u["labels"]) for u in doc["units"])
    assert corpus.flagged == []


def test_empty_units_warns(tmp_path, caplog):
    p = tmp_path / "m.json"
    p.write_text(json.dumps({"version": "1", "units": []}))
    with caplog.at_level(logging.WARNING):
        assert load_corpus(p).units == []
    assert "no units" in caplog.text


def test_unknown_category():
    doc = {"version": "1", "units": [{"path": "a.py", "language": "python-subset", "sizeClass": "small",
                                      "labels": [{"category": "Spaghetti", "span": {"startLine": 1, "endLine": 2}}]}]}
    with pytest.raises(ManifestSchemaError) as e:
        validate_manifest(doc)
    assert e.value.pointer.startswith("/units/0/labels/0")


def test_mismatched_cwe():
    doc = {"version": "1", "units": [{"path": "a.py", "language": "python-subset", "sizeClass": "small",
                                      "labels": [{"category": "Xss", "cwe": 89, "span": {"startLine": 1, "endLine": 1}}]}]}
    with pytest.raises(ManifestSchemaError):
        validate_manifest(doc)


def test_missing_file_flagged(tmp_path):
    p = tmp_path / "m.json"
    p.write_text(json.dumps({"version": "1", "units": [
        {"path": "gone.py", "language": "python-subset", "sizeClass": "small", "labels": []}]}))
    assert [u.error for u in load_corpus(p).flagged] == ["missing file"]


# split

def cu(path, labels=(), size="small"):
    return CorpusUnit(path, "python-subset", size, list(labels))


def test_allocate_ten():
    a = allocate(10, (0.7, 0.15, 0.15))
    assert a[0] == 7 and sorted(a[1:]) == [1, 2] and sum(a) == 10


def test_split_deterministic():
    units = [cu(f"u{i}.py") for i in range(20)]
    assert stratified_split(units, 11).assignment == stratified_split(units, 11).assignment


def test_split_bad_ratios():
    with pytest.raises(RatioError):
        stratified_split([cu("a.py")], 1, (0.5, 0.5, 0.5))


def two_strata():
    sql = [cu(f"s{i}.py", [lab(Rule.SQL_INJECTION, f"s{i}.py", 1, 1, 89)]) for i in range(13)]
    plain = [cu(f"p{i}.py") for i in range(9)]
    return sql + plain


def tolerated(n, ratios):
    """Every (train, validation, test) count vector within one item of the exact share."""
    return {c for c in itertools.product(range(n + 1), repeat=3)
            if sum(c) == n and all(abs(k - n * r) <= 1 for k, r in zip(c, ratios))}


def test_split_two_strata_within_tolerance():
    units = two_strata()
    ratios = (0.7, 0.15, 0.15)
    for seed in range(5):
        s = stratified_split(units, seed, ratios)
        for key in {stratum(u) for u in units}:
            members = [u.path for u in units if stratum(u) == key]
            counts = tuple(sum(s.assignment[p] == part for p in members) for part in ("train", "validation", "test"))
            assert counts in tolerated(len(members), ratios)


# risk

def test_risk_single_sql():
    r = risk_report([fnd(Rule.SQL_INJECTION, "a.py", 1, 1, 89)], [])
    assert r.average_before == 9.0 and r.band_before is Band.HIGH


def test_risk_empty():
    r = risk_report([], [])
    assert r.average_before == 0.0 and r.band_before is Band.LOW


def test_unknown_cwe_warns(caplog):
    with caplog.at_level(logging.WARNING):
        r = risk_report([fnd(Rule.SQL_INJECTION, "a.py", 1, 1, 1234)], [])
    assert r.unknown_cwes == (1234,) and r.average_before == 5.0


def test_band_edges():
    assert band(7.0) is Band.HIGH and band(6.99) is Band.MEDIUM and band(4.0) is Band.MEDIUM and band(3.9) is Band.LOW
