"""Metric-threshold smell detectors.

All thresholds fire on strict inequality; a value sitting exactly on its
threshold never produces a candidate.
"""

from __future__ import annotations

from hybridscan.detection.model import Candidate, Rule, Thresholds
from hybridscan.representation import MetricVector, Node, NormalizedAst
from hybridscan.representation.metrics import SELF_NAMES, imported_names, receiver_accesses

DEFAULT_THRESHOLDS = Thresholds()


def long_method_score(m: MetricVector, t: Thresholds = DEFAULT_THRESHOLDS) -> float | None:
    if not (m.nos > t.long_method_nos or m.cc > t.long_method_cc):
        return None
    return min(1.0, max(m.nos / (2 * t.long_method_nos), m.cc / (2 * t.long_method_cc)))


def god_class_score(m: MetricVector, t: Thresholds = DEFAULT_THRESHOLDS) -> float | None:
    fired = (
        m.nom > t.god_class_nom
        or m.wmc > t.god_class_wmc
        or (m.loc > t.god_class_loc and m.cbo > t.god_class_cbo)
    )
    if not fired:
        return None
    return min(1.0, max(m.nom / (2 * t.god_class_nom), m.wmc / (2 * t.god_class_wmc), m.cbo / (2 * t.god_class_cbo)))


def data_class_score(m: MetricVector, t: Thresholds = DEFAULT_THRESHOLDS) -> float | None:
    if not m.nom or m.accessor_ratio is None:
        return None
    if (
        m.accessor_ratio >= t.data_class_accessor_ratio
        and m.fields >= t.data_class_fields
        and m.wmc <= m.nom + t.data_class_wmc_slack
    ):
        return m.accessor_ratio
    return None


def feature_envy_score(foreign: int, own: int, t: Thresholds = DEFAULT_THRESHOLDS) -> float | None:
    if foreign >= t.feature_envy_foreign and foreign > own:
        return foreign / (foreign + own)
    return None


def _exceedances(values: dict[str, float], limits: dict[str, float]) -> dict[str, dict[str, float]]:
    return {k: {"value": values[k], "threshold": limits[k]} for k in values}


def detect_long_method(path: str, qualname: str, fn: Node, m: MetricVector,
                       t: Thresholds = DEFAULT_THRESHOLDS) -> Candidate | None:
    score = long_method_score(m, t)
    if score is None:
        return None
    ev = {"metrics": _exceedances({"nos": m.nos, "cc": m.cc},
                                  {"nos": t.long_method_nos, "cc": t.long_method_cc})}
    return Candidate(Rule.LONG_METHOD, path, fn.span, qualname, fn.span, score, ev)


def detect_god_class(path: str, qualname: str, cls: Node, m: MetricVector,
                     t: Thresholds = DEFAULT_THRESHOLDS) -> Candidate | None:
    score = god_class_score(m, t)
    if score is None:
        return None
    ev = {"metrics": _exceedances(
        {"nom": m.nom, "wmc": m.wmc, "loc": m.loc, "cbo": m.cbo},
        {"nom": t.god_class_nom, "wmc": t.god_class_wmc, "loc": t.god_class_loc, "cbo": t.god_class_cbo},
    )}
    return Candidate(Rule.GOD_CLASS, path, cls.span, qualname, cls.span, score, ev)


def detect_data_class(path: str, qualname: str, cls: Node, m: MetricVector,
                      t: Thresholds = DEFAULT_THRESHOLDS) -> Candidate | None:
    score = data_class_score(m, t)
    if score is None:
        return None
    ev = {"metrics": _exceedances(
        {"accessorRatio": m.accessor_ratio, "fields": m.fields},
        {"accessorRatio": t.data_class_accessor_ratio, "fields": t.data_class_fields},
    )}
    return Candidate(Rule.DATA_CLASS, path, cls.span, qualname, cls.span, score, ev)


def envy_counts(tree: NormalizedAst, fn: Node) -> tuple[str | None, int, int]:
    """(most-accessed foreign receiver, its access count, own-attribute count)."""
    exclude = imported_names(tree)
    counts = receiver_accesses(fn, exclude)
    own = sum(counts.pop(s, 0) for s in SELF_NAMES)
    if not counts:
        return None, 0, own
    receiver = min(counts, key=lambda r: (-counts[r], r))
    return receiver, counts[receiver], own


def detect_feature_envy(path: str, qualname: str, tree: NormalizedAst, fn: Node,
                        t: Thresholds = DEFAULT_THRESHOLDS) -> Candidate | None:
    if tree.enclosing_class(fn) is None:
        return None
    receiver, foreign, own = envy_counts(tree, fn)
    score = feature_envy_score(foreign, own, t)
    if score is None:
        return None
    ev = {
        "receiver": receiver,
        "metrics": {"foreignAccesses": {"value": foreign, "threshold": t.feature_envy_foreign}},
        "ownAccesses": own,
    }
    return Candidate(Rule.FEATURE_ENVY, path, fn.span, qualname, fn.span, score, ev)
