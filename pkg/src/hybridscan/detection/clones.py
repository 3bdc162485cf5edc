"""Token-clone detection with Rabin-Karp fingerprints over normalized tokens.

Hash hits are always confirmed by comparing the token windows, so hash
collisions can never produce a reported pair.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from hybridscan.representation import Span, Token, TokenKind
from hybridscan.representation.tokens import normalized_lexemes

_MOD = (1 << 61) - 1
_BASE = 1_000_003
MAX_BUCKET = 256


@dataclass(frozen=True, order=True)
class CloneRegion:
    unit: str
    start: int  # token index, inclusive
    end: int  # token index, exclusive
    span: Span


@dataclass(frozen=True, order=True)
class ClonePair:
    a: CloneRegion
    b: CloneRegion

    @property
    def tokens(self) -> int:
        return self.a.end - self.a.start


def _code_tokens(tokens: list[Token]) -> list[Token]:
    return [t for t in tokens if t.kind is not TokenKind.COMMENT]


def window_hashes(codes: list[int], w: int) -> list[int]:
    if len(codes) < w:
        return []
    top = pow(_BASE, w - 1, _MOD)
    h = 0
    for c in codes[:w]:
        h = (h * _BASE + c) % _MOD
    out = [h]
    for i in range(w, len(codes)):
        h = ((h - codes[i - w] * top) * _BASE + codes[i]) % _MOD
        out.append(h)
    return out


def detect_duplicated_code(units: list[tuple[str, list[Token]]], min_tokens: int = 30) -> list[ClonePair]:
    """Maximal normalized-token regions of at least ``min_tokens`` seen twice or more."""
    vocab: dict[str, int] = {}
    seqs: dict[str, list[int]] = {}
    code_toks: dict[str, list[Token]] = {}
    for uid, toks in sorted(units, key=lambda u: u[0]):
        ct = _code_tokens(toks)
        code_toks[uid] = ct
        seqs[uid] = [vocab.setdefault(lx, len(vocab) + 1) for lx in normalized_lexemes(ct)]

    buckets: dict[int, list[tuple[str, int]]] = defaultdict(list)
    for uid in sorted(seqs):
        for i, h in enumerate(window_hashes(seqs[uid], min_tokens)):
            buckets[h].append((uid, i))

    found: set[tuple[tuple[str, int, int], tuple[str, int, int]]] = set()
    for h in sorted(buckets):
        occ = buckets[h]
        if len(occ) < 2 or len(occ) > MAX_BUCKET:
            continue
        for x in range(len(occ)):
            for y in range(x + 1, len(occ)):
                (ua, p), (ub, q) = occ[x], occ[y]
                sa, sb = seqs[ua], seqs[ub]
                if sa[p : p + min_tokens] != sb[q : q + min_tokens]:
                    continue
                same = ua == ub
                if same and p + min_tokens > q:
                    continue  # overlapping occurrence of a periodic run
                if p > 0 and q > 0 and sa[p - 1] == sb[q - 1] and not (same and p - 1 + min_tokens > q - 1):
                    continue  # not the left end of the maximal match
                n = min_tokens
                while p + n < len(sa) and q + n < len(sb) and sa[p + n] == sb[q + n]:
                    if same and p + n + 1 > q:
                        break
                    n += 1
                found.add(((ua, p, p + n), (ub, q, q + n)))

    pairs = []
    for (ua, pa, ea), (ub, pb, eb) in found:
        ra = CloneRegion(ua, pa, ea, _region_span(code_toks[ua], pa, ea))
        rb = CloneRegion(ub, pb, eb, _region_span(code_toks[ub], pb, eb))
        pairs.append(ClonePair(ra, rb))
    return sorted(pairs)


def _region_span(toks: list[Token], start: int, end: int) -> Span:
    a, b = toks[start].span, toks[end - 1].span
    return Span(a.start_line, a.start_col, b.end_line, b.end_col)
