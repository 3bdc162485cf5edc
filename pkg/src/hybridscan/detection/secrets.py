"""Hard-coded credential detection by name pattern and by literal entropy."""

from __future__ import annotations

import math
import re
from collections import Counter

from hybridscan.detection.model import Candidate, Rule, Thresholds
from hybridscan.representation import Node, NormalizedAst
from hybridscan.representation.syntax import dotted_name

CREDENTIAL_NAME = re.compile(r"password|passwd|secret|api_key|apikey|token|credential", re.IGNORECASE)


def shannon_entropy(s: str) -> float:
    """Bits per character."""
    if not s:
        return 0.0
    n = len(s)
    return -sum(c / n * math.log2(c / n) for c in Counter(s).values())


def _target_name(t: Node) -> str | None:
    if t.kind == "Name":
        return t.attrs["id"]
    if t.kind == "Attribute":
        return t.attrs["attr"]
    return None


def _is_docstring(tree: NormalizedAst, lit: Node) -> bool:
    p = tree.parent(lit)
    return p is not None and p.kind == "ExprStmt"


ENV_READS = ("os.getenv", "getenv", "os.environ.get", "environ.get")


def _is_env_key(tree: NormalizedAst, lit: Node) -> bool:
    """The literal names an environment variable rather than holding a value."""
    p = tree.parent(lit)
    if p is None:
        return False
    if p.kind == "Call" and p.attrs.get("callee") in ENV_READS:
        return True
    return p.kind == "Subscript" and lit.role == "index" and dotted_name(p.first("value")) in ("os.environ", "environ")


def _str_literal(n: Node | None) -> bool:
    return n is not None and n.kind == "Literal" and isinstance(n.attrs.get("value"), str) and not n.attrs.get("container")


def detect_hardcoded_secret(path: str, tree: NormalizedAst, t: Thresholds = Thresholds()) -> list[Candidate]:
    named: dict[int, str] = {}
    for n in tree.nodes:
        if n.kind == "Assign":
            value = n.first("value")
            if not _str_literal(value) or len(value.attrs["value"]) < t.secret_min_length:
                continue
            for tgt in n.get("target"):
                name = _target_name(tgt)
                if name and CREDENTIAL_NAME.search(name):
                    named[value.id] = name
                    break
        elif n.kind == "Call":
            kwargs = n.get("kwarg")
            for kname, kval in zip(n.attrs.get("keywords", []), kwargs):
                if kname and CREDENTIAL_NAME.search(kname) and _str_literal(kval) \
                        and len(kval.attrs["value"]) >= t.secret_min_length:
                    named[kval.id] = kname

    out: list[Candidate] = []
    for n in tree.nodes:
        if not _str_literal(n):
            continue
        value = n.attrs["value"]
        entity = tree.enclosing_entity(n)
        qual = tree.qualname(entity)
        if n.id in named:
            ev = {"literal": value, "target": named[n.id], "trigger": "name",
                  "entropy": round(shannon_entropy(value), 6)}
            out.append(Candidate(Rule.HARDCODED_SECRET, path, n.span, qual, entity.span, 1.0, ev))
            continue
        if len(value) < t.entropy_min_length or _is_docstring(tree, n) or _is_env_key(tree, n):
            continue
        h = shannon_entropy(value)
        if h >= t.entropy_bits:
            target = None
            p = tree.parent(n)
            if p is not None and p.kind == "Assign" and n.role == "value":
                target = next((_target_name(x) for x in p.get("target") if _target_name(x)), None)
            ev = {"literal": value, "target": target, "trigger": "entropy", "entropy": round(h, 6)}
            out.append(Candidate(Rule.HARDCODED_SECRET, path, n.span, qual, entity.span, min(1.0, h / 4.5), ev))
    return out
