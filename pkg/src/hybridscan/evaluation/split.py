"""Seeded stratified train/validation/test splits."""

from __future__ import annotations

import math
import random
from collections import Counter, defaultdict
from dataclasses import dataclass

from hybridscan.detection.model import Rule
from hybridscan.evaluation.corpus import Corpus, CorpusUnit

DEFAULT_RATIOS = (0.7, 0.15, 0.15)
PARTS = ("train", "validation", "test")
_RULE_ORDER = {r: i for i, r in enumerate(Rule)}


class RatioError(ValueError):
    pass


def dominant_category(u: CorpusUnit) -> str:
    if not u.labels:
        return "none"
    counts = Counter(lab.category for lab in u.labels)
    return min(counts, key=lambda r: (-counts[r], _RULE_ORDER[r])).value


def stratum(u: CorpusUnit) -> tuple[str, str, str]:
    return (u.language, u.size_class, dominant_category(u))


def allocate(n: int, ratios: tuple[float, ...]) -> list[int]:
    """Largest-remainder apportionment of ``n`` items; earlier parts win ties."""
    exact = [n * r for r in ratios]
    counts = [math.floor(x) for x in exact]
    order = sorted(range(len(ratios)), key=lambda i: (-(exact[i] - counts[i]), i))
    for i in order[: n - sum(counts)]:
        counts[i] += 1
    return counts


@dataclass(frozen=True)
class Split:
    seed: int
    ratios: tuple[float, ...]
    assignment: dict[str, str]  # unit path -> part

    def part(self, name: str) -> list[str]:
        return sorted(p for p, part in self.assignment.items() if part == name)

    def to_dict(self) -> dict:
        return {"seed": self.seed, "ratios": list(self.ratios),
                **{name: self.part(name) for name in PARTS}}


def stratified_split(corpus: Corpus | list[CorpusUnit], seed: int,
                     ratios: tuple[float, float, float] = DEFAULT_RATIOS) -> Split:
    ratios = tuple(float(r) for r in ratios)
    if len(ratios) != 3 or any(r < 0 for r in ratios) or abs(sum(ratios) - 1.0) > 1e-9:
        raise RatioError(f"ratios must be three non-negative numbers summing to 1, got {ratios}")
    units = corpus.units if isinstance(corpus, Corpus) else corpus
    strata: dict[tuple[str, str, str], list[CorpusUnit]] = defaultdict(list)
    for u in units:
        strata[stratum(u)].append(u)
    assignment: dict[str, str] = {}
    for key in sorted(strata):
        members = sorted(strata[key], key=lambda u: u.path)
        random.Random(f"{seed}:{'|'.join(key)}").shuffle(members)
        pos = 0
        for name, count in zip(PARTS, allocate(len(members), ratios)):
            for u in members[pos : pos + count]:
                assignment[u.path] = name
            pos += count
    return Split(seed, ratios, assignment)
