"""Append-only accept/reject log and the fusion-weight recalibration it drives."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from datetime import datetime, timezone
from enum import Enum
from typing import Iterable

from hybridscan.detection.model import FusionWeights, Rule

WINDOW = 50
MIN_RECORDS = 5
STEP = 0.1
W_MIN, W_MAX = 0.1, 0.9


class Verdict(str, Enum):
    ACCEPTED = "accepted"
    REJECTED = "rejected"


class UnknownFinding(KeyError):
    pass


class FeedbackLogError(ValueError):
    pass


def now_iso() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


@dataclass(frozen=True)
class FeedbackRecord:
    timestamp: str
    finding_id: str
    rule: Rule
    verdict: Verdict

    def to_dict(self) -> dict:
        return {"timestamp": self.timestamp, "findingId": self.finding_id, "rule": self.rule.value,
                "verdict": self.verdict.value}

    @classmethod
    def from_dict(cls, d: dict) -> FeedbackRecord:
        return cls(str(d["timestamp"]), str(d["findingId"]), Rule(d["rule"]), Verdict(d["verdict"]))


@dataclass
class FeedbackState:
    records: list[FeedbackRecord] = field(default_factory=list)
    latest: dict[str, Verdict] = field(default_factory=dict)  # finding id -> most recent verdict
    counts: dict[str, dict[str, int]] = field(default_factory=dict)  # rule -> verdict -> count

    def apply(self, r: FeedbackRecord) -> None:
        self.records.append(r)
        self.latest[r.finding_id] = r.verdict
        per = self.counts.setdefault(r.rule.value, {v.value: 0 for v in Verdict})
        per[r.verdict.value] += 1


def replay(records: Iterable[FeedbackRecord]) -> FeedbackState:
    state = FeedbackState()
    for r in records:
        state.apply(r)
    return state


@dataclass
class FeedbackLog:
    """Line-delimited JSON log; records are only ever appended."""

    path: str

    def read(self) -> list[FeedbackRecord]:
        if not os.path.exists(self.path):
            return []
        out = []
        with open(self.path, encoding="utf-8") as fh:
            for n, line in enumerate(fh, 1):
                if not line.strip():
                    continue
                try:
                    out.append(FeedbackRecord.from_dict(json.loads(line)))
                except (ValueError, KeyError, TypeError) as exc:
                    raise FeedbackLogError(f"{self.path}:{n}: bad record ({exc})") from None
        return out

    def append(self, record: FeedbackRecord) -> None:
        parent = os.path.dirname(self.path)
        if parent:
            os.makedirs(parent, exist_ok=True)
        with open(self.path, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(record.to_dict(), sort_keys=True) + "\n")

    def state(self) -> FeedbackState:
        return replay(self.read())


def record_feedback(log: FeedbackLog, record: FeedbackRecord, known_ids: Iterable[str]) -> FeedbackRecord:
    if record.finding_id not in set(known_ids):
        raise UnknownFinding(record.finding_id)
    log.append(record)
    return record


def _clamp(x: float) -> float:
    return min(W_MAX, max(W_MIN, x))


def update_weights(records: Iterable[FeedbackRecord], weights: FusionWeights) -> FusionWeights:
    """Per rule, nudge the semantic weight by the trailing acceptance rate."""
    by_rule: dict[Rule, list[FeedbackRecord]] = {}
    for r in records:
        by_rule.setdefault(r.rule, []).append(r)
    out = weights
    for rule in sorted(by_rule, key=lambda r: r.value):
        recent = by_rule[rule][-WINDOW:]
        if len(recent) < MIN_RECORDS:
            continue
        rate = sum(r.verdict is Verdict.ACCEPTED for r in recent) / len(recent)
        _, w_sem = weights.for_rule(rule)
        new_sem = round(_clamp(w_sem + STEP * (rate - 0.5)), 12)
        if new_sem != w_sem:
            out = out.with_rule(rule, round(1.0 - new_sem, 12), new_sem)
    return out
