"""Edit scripts over source text.

An edit replaces the characters covered by an inclusive span.  A span whose
end lies one column before its start is empty and turns the edit into an
insertion at that position.
"""

from __future__ import annotations

import difflib
import hashlib
import json
from dataclasses import dataclass, field
from enum import Enum

from hybridscan.representation import Span


class PatchKind(str, Enum):
    EXTRACT_METHOD = "extract-method"
    RELOCATE_SECRET = "relocate-secret"
    PARAMETERIZE_QUERY = "parameterize-query"
    ADVISORY = "advisory"


class OverlappingEdits(ValueError):
    pass


class OutOfBounds(ValueError):
    pass


@dataclass(frozen=True)
class Edit:
    span: Span
    replacement: str

    @classmethod
    def insert(cls, line: int, col: int, text: str) -> Edit:
        """Insert ``text`` before column ``col`` of ``line``."""
        return cls(Span(line, col, line, col - 1), text)

    def to_dict(self) -> dict:
        return {"span": self.span.to_dict(), "replacement": self.replacement}


@dataclass(frozen=True)
class Patch:
    edits: tuple[Edit, ...]
    description: str
    kind: PatchKind
    notes: tuple[str, ...] = field(default=())

    @property
    def advisory(self) -> bool:
        return self.kind is PatchKind.ADVISORY

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "description": self.description,
                "edits": [e.to_dict() for e in self.edits], "notes": list(self.notes)}

    def digest(self) -> str:
        return hashlib.sha256(json.dumps(self.to_dict(), sort_keys=True).encode()).hexdigest()


def _line_starts(text: str) -> list[int]:
    starts = [0]
    for i, ch in enumerate(text):
        if ch == "\n":
            starts.append(i + 1)
    return starts


def _offsets(starts: list[int], text: str, span: Span) -> tuple[int, int]:
    def at(line: int, col: int) -> int:
        if not 1 <= line <= len(starts):
            raise OutOfBounds(f"line {line} outside 1..{len(starts)}")
        return starts[line - 1] + col - 1

    lo = at(span.start_line, span.start_col)
    hi = at(span.end_line, span.end_col) + 1
    line_end = starts[span.end_line] - 1 if span.end_line < len(starts) else len(text)
    if span.start_col < 1 or lo > hi or hi > len(text) or hi > line_end + 1:
        raise OutOfBounds(f"edit span {span} outside the text")
    return lo, hi


def resolve(text: str, patch: Patch) -> list[tuple[int, int, str]]:
    """Edits as sorted (start, end, replacement) offsets; rejects overlaps."""
    starts = _line_starts(text)
    ranges = sorted((*_offsets(starts, text, e.span), e.replacement) for e in patch.edits)
    for (a0, a1, _), (b0, b1, _) in zip(ranges, ranges[1:]):
        if b0 < a1 or (a0 == a1 == b0 == b1):
            raise OverlappingEdits(f"edits at offsets {a0}-{a1} and {b0}-{b1} overlap")
    return ranges


def span_text(text: str, span: Span) -> str:
    lo, hi = _offsets(_line_starts(text), text, span)
    return text[lo:hi]


def apply_patch(text: str, patch: Patch) -> str:
    out = text
    for lo, hi, rep in reversed(resolve(text, patch)):
        out = out[:lo] + rep + out[hi:]
    return out


def edit_chars(text: str, patch: Patch) -> int:
    """Characters removed plus characters inserted."""
    return sum((hi - lo) + len(rep) for lo, hi, rep in resolve(text, patch))


def map_line(text: str, patch: Patch, line: int) -> int:
    """Where ``line`` of the original text ends up after the patch."""
    shift = 0
    for e in sorted(patch.edits, key=lambda e: e.span):
        removed = e.span.end_line - e.span.start_line
        added = e.replacement.count("\n")
        leading = e.span.start_col == 1 and e.span.end == (e.span.start_line, 0)
        if e.span.end_line < line or (leading and e.span.start_line <= line):
            shift += added - removed
        elif e.span.start_line < line <= e.span.end_line:
            return e.span.start_line + shift
    return line + shift


def unified_diff(before: str, after: str, path: str) -> str:
    path = path.lstrip("/")
    return "".join(difflib.unified_diff(
        before.splitlines(keepends=True), after.splitlines(keepends=True),
        fromfile=f"a/{path}", tofile=f"b/{path}",
    ))
