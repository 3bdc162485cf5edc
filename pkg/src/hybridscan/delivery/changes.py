"""Changed-files mode: restrict a scan to files and hunks named in a unified diff."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import PurePosixPath

from hybridscan.detection.model import Finding

_HUNK = re.compile(r"^@@ -(\d+)(?:,(\d+))? \+(\d+)(?:,(\d+))? @@")
NULL_PATH = "/dev/null"


class DiffParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"diff line {line}: {message}")
        self.line = line


@dataclass
class ChangedFiles:
    # new-file path -> inclusive line ranges of changed hunks in the new file
    hunks: dict[str, list[tuple[int, int]]] = field(default_factory=dict)

    @property
    def paths(self) -> list[str]:
        return sorted(self.hunks)

    def in_diff(self, finding: Finding) -> bool:
        path = _norm(finding.path)
        for changed, ranges in self.hunks.items():
            if _same(path, changed):
                return any(lo <= finding.span.end_line and finding.span.start_line <= hi for lo, hi in ranges)
        return False


def _norm(path: str) -> str:
    p = PurePosixPath(path.replace("\\", "/")).as_posix()
    while p.startswith("./"):
        p = p[2:]
    return p


def _same(target: str, changed: str) -> bool:
    # diff paths and scan targets are both relative to the working directory
    return _norm(target) == _norm(changed)


def _header_path(raw: str) -> str:
    path = raw.split("\t", 1)[0].strip()
    if path.startswith('"') and path.endswith('"'):
        path = path[1:-1]
    if path != NULL_PATH and path[:2] in ("a/", "b/"):
        path = path[2:]
    return path


def parse_diff(text: str) -> ChangedFiles:
    """Parse a unified diff; hunk counts are checked against the body."""
    out = ChangedFiles()
    lines = text.splitlines()
    i = 0
    current: str | None = None
    while i < len(lines):
        line = lines[i]
        if line.startswith("--- ") and i + 1 < len(lines) and lines[i + 1].startswith("+++ "):
            old, new = _header_path(line[4:]), _header_path(lines[i + 1][4:])
            current = old if new == NULL_PATH else new
            if current == NULL_PATH:
                raise DiffParseError(i + 1, "both sides of the file header are /dev/null")
            out.hunks.setdefault(current, [])
            i += 2
            continue
        if line.startswith("@@"):
            m = _HUNK.match(line)
            if m is None:
                raise DiffParseError(i + 1, f"malformed hunk header {line!r}")
            if current is None:
                raise DiffParseError(i + 1, "hunk before any file header")
            old_n = int(m.group(2)) if m.group(2) is not None else 1
            start = int(m.group(3))
            new_n = int(m.group(4)) if m.group(4) is not None else 1
            i += 1
            seen_old = seen_new = 0
            while i < len(lines) and (seen_old < old_n or seen_new < new_n):
                body = lines[i]
                tag = body[:1]
                if tag == " " or body == "":
                    seen_old += 1
                    seen_new += 1
                elif tag == "-":
                    seen_old += 1
                elif tag == "+":
                    seen_new += 1
                elif tag != "\\":
                    raise DiffParseError(i + 1, f"unexpected line in hunk {body!r}")
                i += 1
            if seen_old != old_n or seen_new != new_n:
                raise DiffParseError(i, "hunk shorter than its header states")
            # a pure deletion still marks the line where the removal happened
            out.hunks[current].append((start, start + new_n - 1) if new_n else (max(start, 1), max(start, 1)))
            continue
        i += 1
    if text.strip() and not out.hunks:
        raise DiffParseError(1, "no file headers found")
    return out


def filter_changed(targets: list[str], diff_text: str) -> tuple[list[str], ChangedFiles]:
    """Keep only targets named in the diff's file headers."""
    changed = parse_diff(diff_text)
    kept = [t for t in targets if any(_same(t, c) for c in changed.hunks)]
    return kept, changed


def tag_in_diff(findings: list[Finding], changed: ChangedFiles) -> dict[str, bool]:
    return {f.id: changed.in_diff(f) for f in findings}
