import math
import sys
from collections import Counter

import pytest

from conftest import FIXTURES, UNITS, unit, views
from oracles import taint_paths
from hybridscan.detection import (
    DEFAULT_POLICY, DEFAULT_WEIGHTS, ExternalScorer, FusionWeights, LexicalScorer, Rule, ScanConfig,
    ScoreRequest, Thresholds, detect_duplicated_code, detect_hardcoded_secret, emitted, fuse,
    scan_unit, scan_units, shannon_entropy, taint_analyze,
)
from hybridscan.detection.smells import (
    data_class_score, feature_envy_score, god_class_score, long_method_score,
)
from hybridscan.representation import MetricVector, SourceUnit, parse, tokenize


def rules(findings):
    return sorted(f.rule.value for f in findings)


# metric smells

def test_long_method_below():
    assert long_method_score(MetricVector(loc=5, nos=5, cc=2)) is None


def test_long_method_nos():
    assert long_method_score(MetricVector(loc=50, nos=40, cc=4)) == pytest.approx(0.667, abs=5e-4)


def test_long_method_exact_thresholds():
    assert long_method_score(MetricVector(loc=40, nos=30, cc=10)) is None


def test_god_class_small():
    assert god_class_score(MetricVector(loc=40, nos=10, cc=1, nom=3, wmc=7)) is None


def test_god_class_at_thresholds():
    assert god_class_score(MetricVector(loc=200, nos=10, cc=1, nom=15, wmc=47, cbo=8)) is None


def test_god_class_fixture():
    res = scan_unit(SourceUnit.from_path(UNITS / "smells" / "god_class_inventory.py"))
    assert [f.entity for f in res.findings if f.rule is Rule.GOD_CLASS] == ["InventoryManager"]


def test_data_class_accessors():
    src = ("class P:\n    def __init__(self, a, b, c):\n        self.a = a\n        self.b = b\n        self.c = c\n\n"
           "    def get_a(self):\n        return self.a\n\n    def get_b(self):\n        return self.b\n\n"
           "    def set_c(self, c):\n        self.c = c\n\n    def get_c(self):\n        return self.c\n")
    res = scan_unit(unit(src))
    assert Rule.DATA_CLASS in {c.rule for c in res.candidates}


def test_data_class_heavy_method():
    src = ("class P:\n    def __init__(self, a):\n        self.a = a\n\n    def run(self, xs):\n"
           "        t = 0\n        for x in xs:\n            if x > self.a:\n                t += x\n        return t\n")
    assert Rule.DATA_CLASS not in {c.rule for c in scan_unit(unit(src)).candidates}


def test_data_class_mixed_fixture():
    res = scan_unit(SourceUnit.from_path(UNITS / "smells" / "data_class_mixed.py"))
    assert Rule.DATA_CLASS not in {c.rule for c in res.candidates}


def test_data_class_ratio_rule():
    assert data_class_score(MetricVector(loc=20, nos=8, cc=1, nom=4, wmc=4, accessor_ratio=0.75, fields=3)) is None
    assert data_class_score(MetricVector(loc=20, nos=8, cc=1, nom=5, wmc=5, accessor_ratio=0.8, fields=3)) == 0.8


def test_feature_envy_arithmetic():
    assert feature_envy_score(0, 2) is None
    assert feature_envy_score(4, 1) == pytest.approx(0.8)
    assert feature_envy_score(3, 3) is None


def test_feature_envy_self_only():
    src = "class A:\n    def f(self):\n        return self.a + self.b + self.c + self.d\n"
    assert Rule.FEATURE_ENVY not in {c.rule for c in scan_unit(unit(src)).candidates}


def test_feature_envy_other():
    src = "class A:\n    def f(self, o):\n        return o.a + o.b + o.c + o.d + self.k\n"
    cands = [c for c in scan_unit(unit(src)).candidates if c.rule is Rule.FEATURE_ENVY]
    assert len(cands) == 1 and cands[0].structural_score == pytest.approx(0.8)


# clones

BODY = ("def {f}(items, limit):\n    total = 0\n    for item in items:\n        if item > limit:\n"
        "            total = total + item\n    total = total * 2\n    return total\n")


def clone_pairs(src, n=30):
    return detect_duplicated_code([("t.py", tokenize(unit(src)))], n)


def test_exact_duplicate():
    src = BODY.format(f="one") + "\n\n" + BODY.format(f="two")
    assert 30 <= len(tokenize(unit(BODY.format(f="one")))) <= 40
    assert len(clone_pairs(src)) == 1


def test_renamed_duplicate():
    other = BODY.format(f="two").replace("items", "rows").replace("total", "acc").replace("limit", "cap")
    assert len(clone_pairs(BODY.format(f="one") + "\n\n" + other)) == 1


def test_short_repeat_ignored():
    short = "def {f}(a):\n    b = a + 1\n    return b * 2\n"
    src = short.format(f="one") + "\n" + short.format(f="two")
    assert clone_pairs(src) == []


# secrets

def test_entropy_values():
    assert shannon_entropy("aaaa") == 0.0
    assert shannon_entropy("ab") == 1.0


def _oracle_entropy(s):
    counts = Counter(s)
    return -sum(c / len(s) * math.log2(c / len(s)) for c in counts.values())


def test_named_secret():
    cands = detect_hardcoded_secret("t.py", parse(unit('password = "hunter2"\n')))
    assert len(cands) == 1 and cands[0].structural_score == 1.0


def test_low_entropy_label():
    assert detect_hardcoded_secret("t.py", parse(unit('label = "aaaa"\n'))) == []


def test_entropy_rule_fixture():
    value = "q8Zr4Kx2Vb7Nw1Lp9Tg3Hs6J"
    assert len(value) == 24 and _oracle_entropy(value) >= 3.5
    cands = detect_hardcoded_secret("t.py", parse(unit(f'seed_value = "{value}"\n')))
    assert len(cands) == 1
    assert cands[0].evidence["trigger"] == "entropy"
    assert cands[0].structural_score == pytest.approx(min(1.0, _oracle_entropy(value) / 4.5), abs=1e-6)


# taint

def test_no_source():
    v = views("def f(cursor):\n    cursor.execute('SELECT 1')\n")
    f = next(iter(v.functions.values()))
    assert taint_analyze(v.tree, f, DEFAULT_POLICY) == []


def test_taint_concat_path():
    v = views("def f(cursor):\n    uid = request_args('id')\n    q = 'SELECT * FROM u WHERE id=' + uid\n"
              "    cursor.execute(q)\n")
    f = next(iter(v.functions.values()))
    paths = taint_analyze(v.tree, f, DEFAULT_POLICY)
    assert [([v.tree.node(s).span.start_line for s in p.stmts], p.sanitized) for p in paths] == [([2, 3, 4], False)]


def test_taint_cast_sanitizes():
    v = views("def f(cursor):\n    uid = request_args('id')\n    uid = int(uid)\n"
              "    q = 'SELECT * FROM u WHERE id=' + str(uid)\n    cursor.execute(q)\n")
    f = next(iter(v.functions.values()))
    paths = taint_analyze(v.tree, f, DEFAULT_POLICY)
    assert paths and all(p.sanitized for p in paths)


def test_taint_matches_oracle(suite_views):
    mismatches = 0
    for f in suite_views.functions.values():
        got = {(p.stmts, p.vars, p.sanitized, p.sink.stmt, p.sink.call, p.sink.cwe)
               for p in taint_analyze(suite_views.tree, f, DEFAULT_POLICY)}
        mismatches += got != taint_paths(suite_views.tree, f, DEFAULT_POLICY)
    assert mismatches == 0


def test_one_unsanitized_path_one_finding():
    res = scan_unit(unit("def f(cursor):\n    q = request_args('q')\n    cursor.execute('SELECT ' + q)\n"))
    assert rules(res.findings) == ["SqlInjection"]


def test_sanitized_path_no_finding():
    res = scan_unit(unit("def f(cursor):\n    q = int(request_args('q'))\n    cursor.execute('SELECT ' + str(q))\n"))
    assert not [f for f in res.findings if f.rule is Rule.SQL_INJECTION]


def test_two_sinks_two_cwes():
    res = scan_unit(SourceUnit.from_path(UNITS / "security" / "multi_sink.py"))
    assert sorted((f.rule.value, f.cwe) for f in res.findings) == [("CommandInjection", 78), ("SqlInjection", 89)]


# semantic scoring

def test_lexical_sql_cues():
    u = unit("def f(cursor, x):\n    cursor.execute('SELECT a FROM t WHERE b=' + x)\n")
    req = ScoreRequest("c1", "SqlInjection", u.text, (), tuple(tokenize(u)))
    assert LexicalScorer().score(req) >= 0.7


def test_lexical_no_cues():
    u = unit("z = 1\n")
    assert LexicalScorer().score(ScoreRequest("c1", "SqlInjection", u.text, (), tuple(tokenize(u)))) == 0.0


def stub(*args):
    return [sys.executable, str(FIXTURES / "stub_scorer.py"), *args]


def test_external_pass_through():
    s = ExternalScorer(stub("reply", "0.42"), timeout=5)
    try:
        assert s.score(ScoreRequest("c1", "Xss", "", (), ())) == 0.42
        assert s.fallbacks == []
    finally:
        s.close()


@pytest.mark.parametrize("mode,reason", [("sleep", "timeout"), ("garbage", "malformed")])
def test_external_fallback(mode, reason):
    s = ExternalScorer(stub(mode), timeout=0.3)
    try:
        assert s.score(ScoreRequest("c1", "Xss", "", (), ())) == 0.0
        assert [f["reason"] for f in s.fallbacks] == [reason]
    finally:
        s.close()


# fusion

def test_fusion_examples():
    w = FusionWeights()
    assert fuse(1.0, 0.0, w) == pytest.approx(0.6) and emitted(fuse(1.0, 0.0, w), w)
    assert fuse(0.4, 0.4, w) == pytest.approx(0.4) and not emitted(fuse(0.4, 0.4, w), w)
    assert fuse(0.55, 0.0, w, semantic_available=False) == 0.55


def test_fusion_rejects_bad_weights():
    with pytest.raises(ValueError):
        FusionWeights(0.7, 0.4)


def test_secret_override():
    assert DEFAULT_WEIGHTS.for_rule(Rule.HARDCODED_SECRET) == (0.5, 0.5)


def test_no_scorer_uses_structural_score():
    res = scan_unit(unit("password = 'hunter2'\n"), ScanConfig(scorer=None))
    assert [f.confidence for f in res.findings] == [1.0]


# end to end

def test_clean_file():
    src = "def add(a, b):\n    return a + b\n\n\ndef sub(a, b):\n    return a - b\n\n\nx = add(1, 2)\ny = sub(3, 1)\n"
    assert scan_unit(unit(src)).findings == []


def test_kitchen_sink_exact():
    res = scan_unit(SourceUnit.from_path(UNITS / "security" / "kitchen_sink.py"))
    got = sorted((f.rule.value, f.span.start_line) for f in res.findings)
    assert got == [("CommandInjection", 13), ("DataClass", 27), ("FeatureEnvy", 23), ("HardcodedSecret", 5),
                   ("HardcodedSecret", 6), ("SqlInjection", 12), ("Xss", 14)]


def test_scan_deterministic():
    u = SourceUnit.from_path(UNITS / "security" / "kitchen_sink.py")
    a, b = scan_unit(u).findings, scan_unit(u).findings
    assert [f.id for f in a] == [f.id for f in b]
    assert [f.to_dict() for f in a] == [f.to_dict() for f in b]


def test_parse_error_skips_unit():
    res = scan_units([unit("x = (\n", "bad.py"), unit("password = 'hunter2'\n", "ok.py")])
    assert [s.path for s in res.skipped] == ["bad.py"]
    assert [f.path for f in res.findings] == ["ok.py"]


def test_threshold_override():
    src = "def f(x):\n" + "".join(f"    x = x + {i}\n" for i in range(12)) + "    return x\n"
    assert not [f for f in scan_unit(unit(src)).candidates if f.rule is Rule.LONG_METHOD]
    cfg = ScanConfig(thresholds=Thresholds(long_method_nos=10))
    assert [c.rule for c in scan_unit(unit(src), cfg).candidates if c.rule is Rule.LONG_METHOD]
