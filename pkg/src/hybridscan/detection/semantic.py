"""Semantic scoring of candidates.

The built-in scorer looks up rule-specific cue lexicons in a token window
around the candidate.  An external scorer can replace it: the tool launches a
command once per scan and exchanges one line-delimited JSON request/reply per
candidate over the child's standard streams.
"""

from __future__ import annotations

import json
import logging
import re
import selectors
import shlex
import subprocess
import time
from dataclasses import dataclass, field
from importlib import resources
from typing import Protocol

from hybridscan.representation import Span, Token

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScoreRequest:
    id: str
    rule: str
    window: str
    spans: tuple[Span, ...]
    tokens: tuple[Token, ...] = ()

    def to_wire(self) -> str:
        return json.dumps({"id": self.id, "rule": self.rule, "window": self.window,
                           "spans": [s.to_dict() for s in self.spans]}, sort_keys=True)


class SemanticScorer(Protocol):
    def score(self, request: ScoreRequest) -> float: ...


def load_lexicon(path: str | None = None) -> dict:
    if path is None:
        text = resources.files("hybridscan.detection").joinpath("data/lexicon.json").read_text(encoding="utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return json.loads(text)


@dataclass(frozen=True)
class Cue:
    name: str
    kind: str
    pattern: re.Pattern
    weight: float


class LexicalScorer:
    def __init__(self, lexicon: dict | None = None):
        self.lexicon = lexicon or load_lexicon()
        self.context_lines = int(self.lexicon.get("contextLines", 3))
        self.cues: dict[str, list[Cue]] = {
            rule: [Cue(c["cue"], c["kind"], re.compile(c["pattern"]), float(c["weight"])) for c in cues]
            for rule, cues in self.lexicon["rules"].items()
        }

    def hits(self, rule: str, tokens: tuple[Token, ...] | list[Token]) -> list[Cue]:
        out = []
        for cue in self.cues.get(rule, []):
            if any(t.kind.value == cue.kind and cue.pattern.search(t.lexeme) for t in tokens):
                out.append(cue)
        return out

    def score(self, request: ScoreRequest) -> float:
        return round(min(1.0, sum(c.weight for c in self.hits(request.rule, request.tokens))), 6)


class PluginError(RuntimeError):
    pass


class PluginTimeout(PluginError):
    pass


class PluginMalformedReply(PluginError):
    pass


@dataclass
class ExternalScorer:
    """Scores via an external process; failures fall back to ``fallback`` and are recorded."""

    command: str | list[str]
    timeout: float = 2.0
    fallback: SemanticScorer = field(default_factory=LexicalScorer)
    fallbacks: list[dict] = field(default_factory=list)
    _proc: subprocess.Popen | None = field(default=None, repr=False)
    _buf: bytes = field(default=b"", repr=False)

    def _start(self) -> subprocess.Popen:
        if self._proc is None or self._proc.poll() is not None:
            argv = shlex.split(self.command) if isinstance(self.command, str) else list(self.command)
            self._proc = subprocess.Popen(argv, stdin=subprocess.PIPE, stdout=subprocess.PIPE,
                                          stderr=subprocess.DEVNULL)
            self._buf = b""
        return self._proc

    def _readline(self, proc: subprocess.Popen, deadline: float) -> bytes:
        sel = selectors.DefaultSelector()
        sel.register(proc.stdout, selectors.EVENT_READ)
        try:
            while b"\n" not in self._buf:
                remaining = deadline - time.monotonic()
                if remaining <= 0 or not sel.select(remaining):
                    raise PluginTimeout("no reply within timeout")
                chunk = proc.stdout.read1(65536) if hasattr(proc.stdout, "read1") else proc.stdout.read(1)
                if not chunk:
                    raise PluginMalformedReply("plugin closed its output")
                self._buf += chunk
        finally:
            sel.close()
        line, _, self._buf = self._buf.partition(b"\n")
        return line

    def request(self, req: ScoreRequest) -> float:
        proc = self._start()
        try:
            proc.stdin.write((req.to_wire() + "\n").encode())
            proc.stdin.flush()
        except (BrokenPipeError, OSError) as exc:
            raise PluginMalformedReply(f"cannot write to plugin: {exc}") from None
        deadline = time.monotonic() + self.timeout
        while True:
            line = self._readline(proc, deadline)
            try:
                reply = json.loads(line)
            except json.JSONDecodeError:
                raise PluginMalformedReply(f"not JSON: {line[:80]!r}") from None
            if not isinstance(reply, dict) or "id" not in reply:
                raise PluginMalformedReply("reply lacks an id")
            if reply["id"] != req.id:
                continue  # stale reply to an earlier, timed-out request
            score = reply.get("score")
            if isinstance(score, bool) or not isinstance(score, (int, float)) or not 0.0 <= score <= 1.0:
                raise PluginMalformedReply(f"score out of range: {score!r}")
            return float(score)

    def score(self, request: ScoreRequest) -> float:
        try:
            return self.request(request)
        except (PluginError, OSError) as exc:
            reason = "timeout" if isinstance(exc, PluginTimeout) else "malformed"
            log.warning("semantic plugin failed for %s (%s); using built-in scorer", request.id, exc)
            self.fallbacks.append({"id": request.id, "reason": reason, "detail": str(exc)})
            return self.fallback.score(request)

    def close(self) -> None:
        if self._proc is not None:
            if self._proc.poll() is None:
                try:
                    self._proc.stdin.close()
                except OSError:
                    pass
                try:
                    self._proc.wait(timeout=1)
                except subprocess.TimeoutExpired:
                    self._proc.kill()
                    self._proc.wait()
            self._proc = None


def window_request(cid: str, rule: str, spans: list[Span], tokens: list[Token], lines: list[str],
                   context: int = 3) -> ScoreRequest:
    lo = max(1, min(s.start_line for s in spans) - context)
    hi = max(s.end_line for s in spans) + context
    toks = tuple(t for t in tokens if lo <= t.span.start_line <= hi)
    window = "\n".join(lines[lo - 1 : hi])
    return ScoreRequest(cid, rule, window, tuple(spans), toks)
