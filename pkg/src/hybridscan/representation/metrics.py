"""Per-entity software metrics."""

from __future__ import annotations

import re
from dataclasses import asdict, dataclass

from hybridscan.representation.source import count_loc
from hybridscan.representation.syntax import STATEMENT_KINDS, Node, NormalizedAst

_TYPE_NAME = re.compile(r"^_?[A-Z][A-Za-z0-9]*[a-z][A-Za-z0-9]*$")
SELF_NAMES = ("self", "cls")


@dataclass(frozen=True)
class MetricVector:
    loc: int
    nos: int
    cc: int
    params: int = 0
    nom: int = 0
    wmc: int = 0
    atfd: int = 0
    accessor_ratio: float | None = None
    cbo: int = 0
    fields: int = 0

    def to_dict(self) -> dict:
        return asdict(self)


def _own_nodes(entity: Node):
    """Nodes of ``entity`` excluding bodies of nested functions/classes."""
    stack = list(reversed(entity.children))
    while stack:
        n = stack.pop()
        yield n
        if n.kind in ("FunctionDef", "ClassDef"):
            continue
        stack.extend(reversed(n.children))


def body_statements(fn: Node) -> list[Node]:
    return [n for n in _own_nodes(fn) if n.kind in STATEMENT_KINDS]


def cyclomatic_complexity(fn: Node) -> int:
    cc = 1
    for n in _own_nodes(fn):
        if n.kind in ("If", "While", "For", "ExceptHandler"):
            cc += 1
        elif n.kind == "BinOp" and n.attrs["op"] in ("and", "or"):
            cc += len(n.children) - 1
    return cc


def imported_names(tree: NormalizedAst) -> set[str]:
    return {b for n in tree.nodes if n.kind == "Import" for b in n.attrs["bound"]}


def receiver_accesses(fn: Node, exclude: set[str]) -> dict[str, int]:
    """Count ``name.attr`` accesses per receiver name (``self`` counted under 'self')."""
    counts: dict[str, int] = {}
    for n in fn.walk():
        if n.kind != "Attribute":
            continue
        base = n.first("value")
        if base is None or base.kind != "Name":
            continue
        name = base.attrs["id"]
        if name in exclude:
            continue
        counts[name] = counts.get(name, 0) + 1
    return counts


def type_references(entity: Node) -> set[str]:
    names = set()
    for n in entity.walk():
        if n.kind == "Name" and _TYPE_NAME.match(n.attrs["id"]):
            names.add(n.attrs["id"])
        elif n.kind == "Attribute" and _TYPE_NAME.match(n.attrs["attr"]):
            names.add(n.attrs["attr"])
    if entity.kind == "ClassDef":
        names.discard(entity.attrs["name"])
    return names


def _strip_docstring(body: list[Node]) -> list[Node]:
    if body and body[0].kind == "ExprStmt":
        v = body[0].first("value")
        if v is not None and v.kind == "Literal" and isinstance(v.attrs.get("value"), str):
            return body[1:]
    return body


def _is_self_attr(n: Node | None) -> bool:
    if n is None or n.kind != "Attribute":
        return False
    base = n.first("value")
    return base is not None and base.kind == "Name" and base.attrs["id"] == "self"


def is_accessor(fn: Node) -> bool:
    params = [p for p in fn.children if p.kind == "Param"]
    body = _strip_docstring(fn.get("body"))
    if len(body) != 1:
        return False
    stmt = body[0]
    if len(params) == 1 and stmt.kind == "Return":
        return _is_self_attr(stmt.first("value"))
    if len(params) == 2 and stmt.kind == "Assign":
        targets = stmt.get("target")
        value = stmt.first("value")
        return (
            len(targets) == 1
            and _is_self_attr(targets[0])
            and value is not None
            and value.kind == "Name"
            and value.attrs["id"] == params[1].attrs["name"]
        )
    return False


def class_fields(cls: Node) -> set[str]:
    fields = set()
    for c in cls.get("body"):
        if c.kind == "Assign":
            for t in c.get("target"):
                if t.kind == "Name":
                    fields.add(t.attrs["id"])
    for m in cls.get("body"):
        if m.kind != "FunctionDef":
            continue
        for n in m.walk():
            if n.kind in ("Assign", "AugAssign"):
                for t in n.get("target"):
                    if _is_self_attr(t):
                        fields.add(t.attrs["attr"])
    return fields


def methods(cls: Node) -> list[Node]:
    return [c for c in cls.get("body") if c.kind == "FunctionDef"]


def _function_metrics(tree: NormalizedAst, fn: Node, text_lines: list[str], imports: set[str]) -> MetricVector:
    params = [p for p in fn.children if p.kind == "Param"]
    if params and tree.enclosing_class(fn) is not None and params[0].attrs["name"] in SELF_NAMES:
        params = params[1:]
    foreign = receiver_accesses(fn, set(SELF_NAMES) | imports)
    return MetricVector(
        loc=_loc(fn, text_lines),
        nos=len(body_statements(fn)),
        cc=cyclomatic_complexity(fn),
        params=len(params),
        atfd=sum(foreign.values()),
        cbo=len(type_references(fn)),
    )


def _loc(node: Node, text_lines: list[str]) -> int:
    return count_loc("\n".join(text_lines[node.span.start_line - 1 : node.span.end_line]))


def compute_metrics(tree: NormalizedAst, entity: Node, text: str) -> MetricVector:
    lines = text.splitlines()
    imports = imported_names(tree)
    if entity.kind == "FunctionDef":
        return _function_metrics(tree, entity, lines, imports)
    if entity.kind != "ClassDef":
        raise ValueError(f"metrics are defined for FunctionDef/ClassDef, not {entity.kind}")
    ms = methods(entity)
    member = [_function_metrics(tree, m, lines, imports) for m in ms]
    nom = len(ms)
    return MetricVector(
        loc=_loc(entity, lines),
        nos=len(body_statements(entity)),
        cc=max((m.cc for m in member), default=1),
        params=0,
        nom=nom,
        wmc=sum(m.cc for m in member),
        atfd=sum(m.atfd for m in member),
        accessor_ratio=(sum(1 for m in ms if is_accessor(m)) / nom) if nom else None,
        cbo=len(type_references(entity)),
        fields=len(class_fields(entity)),
    )
