"""Move hard-coded secrets into environment variables."""

from __future__ import annotations

import re

from hybridscan.detection.model import Finding, Rule
from hybridscan.repair.patch import Edit, Patch, PatchKind
from hybridscan.representation import NormalizedAst, SourceUnit

ENV_READ = "os.getenv"


def env_key(target: str | None, line: int) -> str:
    """Upper snake case of the assignment target (camelCase is split on capitals)."""
    if not target:
        return f"SECRET_LINE_{line}"
    snake = re.sub(r"(?<=[a-z0-9])([A-Z])", r"_\1", target)
    snake = re.sub(r"[^A-Za-z0-9]+", "_", snake).strip("_")
    return snake.upper() or f"SECRET_LINE_{line}"


def import_line(tree: NormalizedAst) -> int:
    """Line before which a new top-level import goes: with the existing imports, else after the docstring."""
    body = tree.root.get("body")
    for c in body:
        if c.kind == "Import" and c.attrs["module"] != "__future__":
            return c.span.start_line
    line = 1
    for c in body:
        docstring = c.kind == "ExprStmt" and c.first("value").kind == "Literal" and line == 1 \
            and isinstance(c.first("value").attrs.get("value"), str)
        future = c.kind == "Import" and c.attrs["module"] == "__future__"
        if docstring or future:
            line = c.span.end_line + 1
            continue
        break
    return line


def ensure_import(unit: SourceUnit, tree: NormalizedAst, module: str) -> tuple[Edit, ...]:
    present = any(c.kind == "Import" and c.attrs["module"] is None and (module, None) in c.attrs["names"]
                  for c in tree.root.get("body"))
    if present:
        return ()
    line = import_line(tree)
    if line > len(unit.lines):
        last = len(unit.lines)
        return (Edit.insert(last, len(unit.lines[last - 1]) + 1, f"\nimport {module}"),)
    return (Edit.insert(line, 1, f"import {module}\n"),)


def relocate_secret(unit: SourceUnit, tree: NormalizedAst, finding: Finding) -> Patch:
    if finding.rule is not Rule.HARDCODED_SECRET or "literal" not in finding.evidence:
        raise ValueError("relocate_secret needs a HardcodedSecret finding with literal evidence")
    key = env_key(finding.evidence.get("target"), finding.span.start_line)
    edits = (*ensure_import(unit, tree, "os"), Edit(finding.span, f'{ENV_READ}("{key}")'))
    return Patch(
        edits,
        f"Read the secret at line {finding.span.start_line} from environment variable {key}",
        PatchKind.RELOCATE_SECRET,
        (f"provision environment variable {key}",),
    )
