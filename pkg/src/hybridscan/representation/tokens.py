"""Lexical view of a source unit."""

from __future__ import annotations

import io
import keyword
import tokenize as _tokenize
from dataclasses import dataclass
from enum import Enum

from hybridscan.representation.source import SourceUnit, Span


class TokenKind(str, Enum):
    IDENTIFIER = "identifier"
    KEYWORD = "keyword"
    STRING = "string-literal"
    NUMBER = "number-literal"
    OPERATOR = "operator"
    PUNCTUATION = "punctuation"
    COMMENT = "comment"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    lexeme: str
    span: Span


class ParseError(Exception):
    """Front-end failure; the unit is excluded from the scan."""

    def __init__(self, span: Span, expected: str):
        super().__init__(f"{span}: {expected}")
        self.span = span
        self.expected = expected


class LexError(ParseError):
    def __init__(self, span: Span, message: str = "illegal character"):
        super().__init__(span, message)


PUNCTUATION = frozenset({"(", ")", "[", "]", "{", "}", ",", ":", ";", ".", "...", "\\"})

_SKIP = {
    _tokenize.NEWLINE,
    _tokenize.NL,
    _tokenize.INDENT,
    _tokenize.DEDENT,
    _tokenize.ENDMARKER,
    _tokenize.ENCODING,
}


def _span(start: tuple[int, int], end: tuple[int, int]) -> Span:
    # tokenize columns are 0-based with exclusive end
    return Span(start[0], start[1] + 1, end[0], end[1])


def python_tokens(text: str) -> list[Token]:
    out: list[Token] = []
    try:
        for tok in _tokenize.generate_tokens(io.StringIO(text).readline):
            if tok.type in _SKIP:
                continue
            span = _span(tok.start, tok.end)
            if tok.type == _tokenize.NAME:
                kind = TokenKind.KEYWORD if keyword.iskeyword(tok.string) else TokenKind.IDENTIFIER
            elif tok.type == _tokenize.STRING:
                kind = TokenKind.STRING
            elif tok.type == _tokenize.NUMBER:
                kind = TokenKind.NUMBER
            elif tok.type == _tokenize.COMMENT:
                kind = TokenKind.COMMENT
            elif tok.type == _tokenize.OP:
                kind = TokenKind.PUNCTUATION if tok.string in PUNCTUATION else TokenKind.OPERATOR
            elif tok.type == _tokenize.ERRORTOKEN:
                if tok.string.isspace():
                    continue
                raise LexError(span, f"illegal character {tok.string!r}")
            else:
                raise LexError(span, f"unexpected token {tok.string!r}")
            out.append(Token(kind, tok.string, span))
    except _tokenize.TokenError as exc:
        line, col = exc.args[1]
        raise LexError(Span(line, col + 1, line, col + 1), exc.args[0]) from None
    except IndentationError as exc:
        line = exc.lineno or 1
        raise LexError(Span(line, 1, line, 1), exc.msg) from None
    return _add_continuations(text, out)


def _add_continuations(text: str, tokens: list[Token]) -> list[Token]:
    """Explicit line joins are not emitted by the stdlib tokenizer; cover them."""
    if "\\" not in text:
        return tokens
    covered: dict[int, list[tuple[int, int]]] = {}
    for t in tokens:
        if t.span.start_line == t.span.end_line:
            covered.setdefault(t.span.start_line, []).append((t.span.start_col, t.span.end_col))
    extra: list[Token] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.rstrip()
        if not body.endswith("\\"):
            continue
        col = len(body)
        if any(a <= col <= b for a, b in covered.get(lineno, [])):
            continue
        if any(t.span.start_line < lineno <= t.span.end_line for t in tokens):
            continue  # inside a multi-line string
        extra.append(Token(TokenKind.PUNCTUATION, "\\", Span(lineno, col, lineno, col)))
    if not extra:
        return tokens
    return sorted(tokens + extra, key=lambda t: t.span.start)


def tokenize(unit: SourceUnit) -> list[Token]:
    from hybridscan.representation.syntax import get_frontend

    return get_frontend(unit.language).tokenize(unit)


def normalized_lexemes(tokens: list[Token]) -> list[str]:
    """Identifiers become ``ID`` and literals ``LIT``; comments are dropped."""
    out = []
    for t in tokens:
        if t.kind is TokenKind.COMMENT:
            continue
        if t.kind is TokenKind.IDENTIFIER:
            out.append("ID")
        elif t.kind in (TokenKind.STRING, TokenKind.NUMBER):
            out.append("LIT")
        else:
            out.append(t.lexeme)
    return out
