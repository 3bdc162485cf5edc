"""Source ingestion: units, spans and line counting."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

PYTHON_SUBSET = "python-subset"


class UnsupportedLanguage(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Span:
    """1-based source region; ``end_col`` is inclusive."""

    start_line: int
    start_col: int
    end_line: int
    end_col: int

    @property
    def start(self) -> tuple[int, int]:
        return (self.start_line, self.start_col)

    @property
    def end(self) -> tuple[int, int]:
        return (self.end_line, self.end_col)

    def contains(self, other: Span) -> bool:
        return self.start <= other.start and other.end <= self.end

    def overlaps_lines(self, start_line: int, end_line: int) -> bool:
        return self.start_line <= end_line and start_line <= self.end_line

    def to_dict(self) -> dict[str, int]:
        return {
            "startLine": self.start_line,
            "startCol": self.start_col,
            "endLine": self.end_line,
            "endCol": self.end_col,
        }

    @classmethod
    def from_dict(cls, d: dict) -> Span:
        return cls(d["startLine"], d["startCol"], d["endLine"], d["endCol"])

    def __str__(self) -> str:
        return f"{self.start_line}:{self.start_col}-{self.end_line}:{self.end_col}"


def count_loc(text: str) -> int:
    """Non-blank lines that are not comment-only."""
    n = 0
    for line in text.splitlines():
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            n += 1
    return n


@dataclass(frozen=True)
class SourceUnit:
    id: str
    path: str
    language: str
    text: str = field(repr=False)
    loc: int = 0

    @classmethod
    def from_text(cls, text: str, path: str = "<memory>.py", language: str = PYTHON_SUBSET) -> SourceUnit:
        path = Path(path).as_posix()
        return cls(id=path, path=path, language=language, text=text, loc=count_loc(text))

    @classmethod
    def from_path(cls, path: str | Path, root: str | Path | None = None, language: str | None = None) -> SourceUnit:
        path = Path(path)
        rel = path.relative_to(root) if root is not None else path
        text = path.read_text(encoding="utf-8")
        return cls.from_text(text, rel.as_posix(), language or language_for(path))

    @property
    def lines(self) -> list[str]:
        return self.text.splitlines()

    def line_count(self) -> int:
        return len(self.text.splitlines())

    def snippet(self, span: Span) -> str:
        lines = self.lines[span.start_line - 1 : span.end_line]
        return "\n".join(lines)


def language_for(path: Path) -> str:
    from hybridscan.representation.syntax import frontend_for_suffix

    fe = frontend_for_suffix(path.suffix)
    if fe is None:
        raise UnsupportedLanguage(f"no front-end for {path.suffix!r} files")
    return fe.language
