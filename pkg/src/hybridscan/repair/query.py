"""Injection repairs: bound query parameters for SQL, quoting for shell commands."""

from __future__ import annotations

import re

from hybridscan.detection.model import Finding, Rule
from hybridscan.repair.patch import Edit, Patch, PatchKind, span_text
from hybridscan.repair.secret import ensure_import
from hybridscan.representation import FunctionView, Node, NormalizedAst, SourceUnit
from hybridscan.representation.syntax import STATEMENT_KINDS

PLACEHOLDER = "?"
_SPEC = re.compile(r"%%|%(?:\([^)]*\))?[-#0 +]*\d*(?:\.\d+)?[sdifrx]")


class UnsupportedShape(ValueError):
    """The sink argument is not a concatenation or format of literals and tainted names."""


def _is_str(n: Node) -> bool:
    return n.kind == "Literal" and not n.attrs.get("container") and isinstance(n.attrs.get("value"), str)


def _sink_call(tree: NormalizedAst, finding: Finding) -> tuple[Node, Node]:
    callee = finding.evidence.get("sink")
    for stmt in tree.statements():
        if stmt.span != finding.span:
            continue
        for e in stmt.header_exprs():
            for n in e.walk():
                if n.kind == "Call" and n.attrs.get("callee") == callee:
                    return stmt, n
    raise UnsupportedShape(f"no call to {callee} at {finding.span}")


def tainted_names(finding: Finding) -> set[str]:
    return {v for p in finding.evidence.get("paths", []) for v in p["vars"]}


def _shaped(n: Node) -> bool:
    return n.kind == "BinOp" and n.attrs["op"] in ("+", "fstring", "%")


def _builder(tree: NormalizedAst, view: FunctionView, stmt: Node, arg: Node) -> Node:
    """The expression that assembles the sink argument: the argument itself or its single reaching definition."""
    if _shaped(arg):
        return arg
    if arg.kind != "Name":
        raise UnsupportedShape("sink argument is neither a name nor a concatenation")
    defs = view.defuse.reaching_defs(stmt.id, arg.attrs["id"])
    if len(defs) != 1:
        raise UnsupportedShape(f"{arg.attrs['id']} has {len(defs)} reaching definitions")
    d = tree.node(next(iter(defs)))
    targets = d.get("target") if d.kind == "Assign" else []
    if len(targets) != 1 or targets[0].kind != "Name":
        raise UnsupportedShape(f"{arg.attrs['id']} is not built by a plain assignment")
    value = d.first("value")
    if not _shaped(value):
        raise UnsupportedShape(f"{arg.attrs['id']} is not built by concatenation or formatting")
    return value


def _concat_parts(n: Node) -> list[Node]:
    if n.kind == "BinOp" and n.attrs["op"] == "+":
        return [p for c in n.children for p in _concat_parts(c)]
    return [n]


def _raw_parts(expr: Node) -> list[str | Node]:
    """Literal text and value expressions of one concatenation or format, in order."""
    op = expr.attrs["op"]
    if op != "%":
        return [p.attrs["value"] if _is_str(p) else p
                for p in (_concat_parts(expr) if op == "+" else expr.children)]
    fmt, values = expr.children
    if not _is_str(fmt):
        raise UnsupportedShape("format string is not a literal")
    names = values.children if values.kind == "Literal" and values.attrs.get("container") == "tuple" else [values]
    out: list[str | Node] = []
    pos, k = 0, 0
    text = fmt.attrs["value"]
    for m in _SPEC.finditer(text):
        out.append(text[pos:m.start()])
        if m.group() == "%%":
            out.append("%")
        else:
            if k >= len(names):
                raise UnsupportedShape("more format specifiers than values")
            out.append(names[k])
            k += 1
        pos = m.end()
    out.append(text[pos:])
    if k != len(names):
        raise UnsupportedShape("more values than format specifiers")
    return out


def _stmt_of(tree: NormalizedAst, node: Node) -> Node:
    for a in [node, *tree.ancestors(node)]:
        if a.kind in STATEMENT_KINDS:
            return a
    raise UnsupportedShape(f"no statement encloses {node.span}")


def _plain_value(tree: NormalizedAst, def_id: int) -> Node | None:
    d = tree.node(def_id)
    targets = d.get("target") if d.kind == "Assign" else []
    if len(targets) != 1 or targets[0].kind != "Name":
        return None
    return d.first("value")


def _fragments(tree: NormalizedAst, view: FunctionView, expr: Node, depth: int = 0) -> list[str | Node]:
    """Literal text and value expressions; names built from text are inlined through their definitions."""
    if depth > 16:
        raise UnsupportedShape("query is assembled through too many statements")
    out: list[str | Node] = []
    for p in _raw_parts(expr):
        if isinstance(p, str) or p.kind != "Name":
            out.append(p)
            continue
        defs = view.defuse.reaching_defs(_stmt_of(tree, p).id, p.attrs["id"])
        values = [_plain_value(tree, d) for d in sorted(defs)]
        textual = [v for v in values if v is not None and (_is_str(v) or _shaped(v))]
        if not textual:
            out.append(p)
        elif len(values) == 1:
            v = textual[0]
            out.extend([v.attrs["value"]] if _is_str(v) else _fragments(tree, view, v, depth + 1))
        else:
            # binding a partly assembled query as a value would be wrong
            raise UnsupportedShape(f"{p.attrs['id']} is assembled along several paths")
    if not any(isinstance(p, Node) for p in out):
        raise UnsupportedShape("no value fragment")
    return out


def _quote(s: str) -> str:
    if '"' not in s and "\\" not in s and "\n" not in s:
        return f'"{s}"'
    return repr(s)


def template(parts: list[str | Node]) -> tuple[str, list[Node]]:
    parts = list(parts)
    text: list[str] = []
    args: list[Node] = []
    for i, p in enumerate(parts):
        if isinstance(p, str):
            text.append(p)
            continue
        # a value that was wrapped in quotes inside the SQL text loses them
        prev = text[-1] if text else ""
        nxt = parts[i + 1] if i + 1 < len(parts) and isinstance(parts[i + 1], str) else ""
        if prev[-1:] in ("'", '"') and nxt[:1] == prev[-1:]:
            text[-1] = prev[:-1]
            parts[i + 1] = nxt[1:]
        text.append(PLACEHOLDER)
        args.append(p)
    return "".join(text), args


def _bindable(unit: SourceUnit, tree: NormalizedAst, view: FunctionView, sink: Node, value: Node) -> str:
    """Source text of a value re-evaluated at the sink; it must denote the same value there."""
    origin = _stmt_of(tree, value)
    if origin.id == sink.id:
        return span_text(unit.text, value.span)
    if value.kind != "Name":
        raise UnsupportedShape(f"expression at {value.span} cannot be moved to the sink")
    var = value.attrs["id"]
    if view.defuse.defs_before(origin.id, var) != view.defuse.defs_before(sink.id, var):
        raise UnsupportedShape(f"{var} is redefined before the sink")
    return var


def _args_tuple(names: list[str]) -> str:
    return f"({names[0]},)" if len(names) == 1 else f"({', '.join(names)})"


def parameterize_query(unit: SourceUnit, tree: NormalizedAst, view: FunctionView, finding: Finding) -> Patch:
    if finding.rule is not Rule.SQL_INJECTION:
        raise UnsupportedShape("only SqlInjection findings take bound parameters")
    stmt, call = _sink_call(tree, finding)
    args = call.get("arg")
    if len(args) != 1 or call.get("kwarg"):
        raise UnsupportedShape("sink already takes parameters")
    builder = _builder(tree, view, stmt, args[0])
    text, values = template(_fragments(tree, view, builder))
    names = [_bindable(unit, tree, view, stmt, v) for v in values]
    bound = _args_tuple(names)
    if builder is args[0]:
        edits: tuple[Edit, ...] = (Edit(builder.span, f"{_quote(text)}, {bound}"),)
    else:
        a = args[0].span
        edits = (Edit(builder.span, _quote(text)), Edit.insert(a.end_line, a.end_col + 1, f", {bound}"))
    return Patch(edits, f"Bind {', '.join(names)} as query parameters at line {stmt.span.start_line}",
                 PatchKind.PARAMETERIZE_QUERY)


def quote_command(unit: SourceUnit, tree: NormalizedAst, view: FunctionView, finding: Finding) -> Patch:
    if finding.rule is not Rule.COMMAND_INJECTION:
        raise UnsupportedShape("only CommandInjection findings are quoted")
    stmt, call = _sink_call(tree, finding)
    args = call.get("arg")
    if not args:
        raise UnsupportedShape("sink has no command argument")
    builder = _builder(tree, view, stmt, args[0])
    parts = _fragments(tree, view, builder)
    tainted = tainted_names(finding)
    edits: list[Edit] = []
    names = []
    for p in parts:
        if isinstance(p, Node):
            text = span_text(unit.text, p.span)
            inner = text if p.kind == "Name" and text in tainted else f"str({text})"
            edits.append(Edit(p.span, f"shlex.quote({inner})"))
            names.append(text)
    edits.extend(ensure_import(unit, tree, "shlex"))
    return Patch(tuple(edits), f"Shell-quote {', '.join(names)} in the command at line {stmt.span.start_line}",
                 PatchKind.PARAMETERIZE_QUERY)

