"""Matching predictions to labels and counting the confusion matrix."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from hybridscan.detection.model import CLASS_RULES, METHOD_RULES, Finding, Rule
from hybridscan.evaluation.corpus import Label
from hybridscan.representation import NormalizedAst
from hybridscan.representation.syntax import COMPOUND_KINDS, STATEMENT_KINDS


@dataclass
class ConfusionCounts:
    tp: int = 0
    fp: int = 0
    fn: int = 0
    tn: int = 0

    def __add__(self, other: ConfusionCounts) -> ConfusionCounts:
        return ConfusionCounts(self.tp + other.tp, self.fp + other.fp, self.fn + other.fn, self.tn + other.tn)

    def to_dict(self) -> dict[str, int]:
        return {"tp": self.tp, "fp": self.fp, "fn": self.fn, "tn": self.tn}


@dataclass
class MatchResult:
    per_category: dict[str, ConfusionCounts] = field(default_factory=dict)
    pairs: list[tuple[str, Label]] = field(default_factory=list)  # (finding id, label)

    @property
    def pooled(self) -> ConfusionCounts:
        total = ConfusionCounts()
        for c in self.per_category.values():
            total = total + c
        return total


def entity_kind(rule: Rule) -> str:
    if rule in CLASS_RULES:
        return "class"
    if rule in METHOD_RULES:
        return "function"
    return "statement"


def universe(tree: NormalizedAst, kind: str) -> list[tuple[int, int]]:
    """Line ranges of the entities that make up the negative universe for ``kind``."""
    if kind == "class":
        nodes = [n for _, n in tree.classes()]
    elif kind == "function":
        nodes = [n for _, n in tree.functions()]
    else:
        nodes = [n for n in tree.nodes if n.kind in STATEMENT_KINDS and n.kind not in COMPOUND_KINDS
                 and n.kind not in ("FunctionDef", "ClassDef", "ExceptHandler")]
    return sorted({(n.span.start_line, n.span.end_line) for n in nodes})


def _innermost(ranges: list[tuple[int, int]], line: int) -> tuple[int, int] | None:
    inside = [r for r in ranges if r[0] <= line <= r[1]]
    return min(inside, key=lambda r: (r[1] - r[0], r)) if inside else None


def match_findings(predicted: list[Finding], labels: list[Label],
                   trees: dict[str, NormalizedAst] | None = None,
                   categories: list[Rule] | None = None) -> MatchResult:
    """One-to-one greedy matching in span order; ``trees`` (by path) enable true-negative counts."""
    cats = categories or list(Rule)
    preds: dict[tuple[str, Rule], list[Finding]] = defaultdict(list)
    labs: dict[tuple[str, Rule], list[Label]] = defaultdict(list)
    for f in predicted:
        preds[(f.path, f.rule)].append(f)
    for lab in labels:
        labs[(lab.path, lab.category)].append(lab)

    result = MatchResult({r.value: ConfusionCounts() for r in cats})
    for key in sorted(set(preds) | set(labs), key=lambda k: (k[0], k[1].value)):
        rule = key[1]
        if rule not in cats:
            continue
        counts = result.per_category[rule.value]
        ps = sorted(preds.get(key, []), key=lambda f: (f.span, f.id))
        ls = sorted(labs.get(key, []), key=lambda x: (x.start_line, x.end_line))
        used = [False] * len(ls)
        for f in ps:
            for i, lab in enumerate(ls):
                if not used[i] and lab.overlaps(f.span.start_line, f.span.end_line):
                    used[i] = True
                    counts.tp += 1
                    result.pairs.append((f.id, lab))
                    break
            else:
                counts.fp += 1
        counts.fn += used.count(False)

    if trees:
        for rule in cats:
            kind = entity_kind(rule)
            tn = 0
            for path, tree in sorted(trees.items()):
                ranges = universe(tree, kind)
                touched = {_innermost(ranges, lab.start_line) for lab in labs.get((path, rule), [])}
                touched |= {_innermost(ranges, f.span.start_line) for f in preds.get((path, rule), [])}
                tn += len(set(ranges) - touched)
            result.per_category[rule.value].tn = tn
    return result
