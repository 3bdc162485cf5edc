"""Property-based invariants: attribution mass, fusion monotonicity, threshold ties and weight bounds."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import UNITS
from hybridscan.delivery.feedback import FeedbackRecord, Verdict, update_weights
from hybridscan.detection import FusionWeights, Rule, Thresholds, emitted, fuse, scan_units
from hybridscan.detection.model import Finding
from hybridscan.detection.smells import feature_envy_score, god_class_score, long_method_score
from hybridscan.explanation.attribution import attribute
from hybridscan.representation import MetricVector, SourceUnit, Span

score = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
weight = st.floats(min_value=0.1, max_value=0.9, allow_nan=False)
rules = st.sampled_from(list(Rule))


def weights_from(w_sem: float) -> FusionWeights:
    return FusionWeights(round(1.0 - w_sem, 12), round(w_sem, 12))


# attribution

@pytest.fixture(scope="module")
def corpus_scan():
    units = [SourceUnit.from_path(p) for p in sorted(UNITS.rglob("*.py")) if p.parent.name != "filler"]
    return scan_units(units)


def test_attribution_sums_to_one_on_corpus(corpus_scan):
    assert corpus_scan.findings
    views = {v.unit.path: v for v in corpus_scan.views.values()}
    for f in corpus_scan.findings:
        a = attribute(f, views[f.path])
        assert abs(sum(i.weight for i in a.items) - 1.0) <= 1e-9, f.id
        assert all(i.weight >= 0 for i in a.items)


@given(st.dictionaries(st.sampled_from(["nos", "cc", "nom", "wmc", "cbo", "loc"]),
                       st.tuples(st.integers(0, 10_000), st.integers(0, 500)), min_size=1))
def test_metric_attribution_sums_to_one(metrics):
    span = Span(1, 1, 2, 1)
    evidence = {"metrics": {k: {"value": v, "threshold": t} for k, (v, t) in metrics.items()}}
    f = Finding("x", Rule.LONG_METHOD, "m.py", span, "f", span, 1.0, 1.0, 1.0, None, evidence)
    a = attribute(f)
    assert abs(sum(i.weight for i in a.items) - 1.0) <= 1e-9


@given(st.integers(1, 40))
def test_taint_attribution_sums_to_one(n):
    spans = [Span(i, 1, i, 5).to_dict() for i in range(1, n + 1)]
    evidence = {"paths": [{"stmts": list(range(n)), "spans": spans}]}
    span = Span(1, 1, n, 5)
    f = Finding("x", Rule.SQL_INJECTION, "m.py", span, "f", span, 1.0, 1.0, 1.0, 89, evidence)
    assert abs(sum(i.weight for i in attribute(f).items) - 1.0) <= 1e-9


# fusion

@given(score, score, score, weight, rules)
def test_fusion_monotone_in_structural(s1, s2, sem, w_sem, rule):
    w = weights_from(w_sem)
    lo, hi = sorted((s1, s2))
    assert fuse(lo, sem, w, rule) <= fuse(hi, sem, w, rule)


@given(score, score, score, weight, rules)
def test_fusion_monotone_in_semantic(sem1, sem2, s, w_sem, rule):
    w = weights_from(w_sem)
    lo, hi = sorted((sem1, sem2))
    assert fuse(s, lo, w, rule) <= fuse(s, hi, w, rule)


@given(score, score, weight)
def test_fusion_bounded(s, sem, w_sem):
    assert 0.0 <= fuse(s, sem, weights_from(w_sem)) <= 1.0


# threshold ties: strict comparisons never fire at the boundary

@given(st.integers(1, 200), st.integers(1, 60), st.integers(0, 1_000))
def test_long_method_boundary(nos_t, cc_t, loc):
    t = Thresholds(long_method_nos=nos_t, long_method_cc=cc_t)
    assert long_method_score(MetricVector(loc=loc, nos=nos_t, cc=cc_t), t) is None
    assert long_method_score(MetricVector(loc=loc, nos=nos_t + 1, cc=cc_t), t) is not None


@given(st.integers(1, 60), st.integers(1, 200), st.integers(1, 1_000), st.integers(1, 40))
def test_god_class_boundary(nom_t, wmc_t, loc_t, cbo_t):
    t = Thresholds(god_class_nom=nom_t, god_class_wmc=wmc_t, god_class_loc=loc_t, god_class_cbo=cbo_t)
    at = MetricVector(loc=loc_t, nos=1, cc=1, nom=nom_t, wmc=wmc_t, cbo=cbo_t)
    assert god_class_score(at, t) is None
    # loc over but cbo still at its limit: the conjunction stays quiet
    assert god_class_score(MetricVector(loc=loc_t + 50, nos=1, cc=1, nom=nom_t, wmc=wmc_t, cbo=cbo_t), t) is None


@given(st.integers(0, 200))
def test_feature_envy_tie(n):
    assert feature_envy_score(n, n) is None


@given(weight, rules)
def test_fusion_below_threshold_never_fires(w_sem, rule):
    w = weights_from(w_sem)
    ws, wl = w.for_rule(rule)
    # largest equal-score input whose fused value stays under the cut-off
    s = max(0.0, (w.threshold - 1e-6) / (ws + wl))
    below = fuse(s, s, w, rule)
    assert below < w.threshold and not emitted(below, w)


# feedback weights

verdicts = st.lists(st.tuples(rules, st.sampled_from(list(Verdict))), max_size=150)


def records(pairs):
    return [FeedbackRecord(f"t{i:04d}", f"id{i}", r, v) for i, (r, v) in enumerate(pairs)]


@settings(max_examples=200)
@given(verdicts, weight)
def test_feedback_weights_bounded(pairs, w_sem):
    w = weights_from(w_sem)
    out = update_weights(records(pairs), w)
    for rule in Rule:
        ws, wl = out.for_rule(rule)
        assert 0.1 <= wl <= 0.9 and 0.1 <= ws <= 0.9
        assert abs(ws + wl - 1.0) <= 1e-9


@settings(max_examples=100)
@given(st.lists(verdicts, min_size=1, max_size=6), weight)
def test_feedback_weights_bounded_when_iterated(batches, w_sem):
    w = weights_from(w_sem)
    for batch in batches:
        w = update_weights(records(batch), w)
        for rule in Rule:
            assert 0.1 <= w.for_rule(rule)[1] <= 0.9


@given(rules, st.integers(0, 80), weight)
def test_feedback_monotone_influence(rule, n, w_sem):
    w = weights_from(w_sem)
    up = update_weights(records([(rule, Verdict.ACCEPTED)] * n), w)
    down = update_weights(records([(rule, Verdict.REJECTED)] * n), w)
    assert up.for_rule(rule)[1] >= w.for_rule(rule)[1] - 1e-12
    assert down.for_rule(rule)[1] <= w.for_rule(rule)[1] + 1e-12
