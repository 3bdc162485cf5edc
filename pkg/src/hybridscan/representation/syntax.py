"""Normalized syntax tree and the front-end seam.

Every language front-end lowers its native syntax into the same small set of
node kinds so the graph builders and detectors never see language-specific
trees.  The built-in front-end accepts a statically-defined subset of Python.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass, field
from typing import Any, Iterator, Protocol

from hybridscan.representation.source import PYTHON_SUBSET, SourceUnit, Span, UnsupportedLanguage
from hybridscan.representation.tokens import ParseError, Token, python_tokens

NODE_KINDS = (
    "Module", "ClassDef", "FunctionDef", "Param", "Assign", "AugAssign", "If", "While",
    "For", "Return", "ExprStmt", "Call", "Attribute", "Name", "Literal", "BinOp",
    "Compare", "Subscript", "Try", "ExceptHandler", "Raise", "Import", "Pass", "Break",
    "Continue",
)

STATEMENT_KINDS = frozenset({
    "ClassDef", "FunctionDef", "Assign", "AugAssign", "If", "While", "For", "Return",
    "ExprStmt", "Try", "Raise", "Import", "Pass", "Break", "Continue",
})
COMPOUND_KINDS = frozenset({"If", "While", "For", "Try"})
PREDICATE_KINDS = frozenset({"If", "While", "For"})
BODY_ROLES = ("body", "orelse", "handler", "finalbody")


class Node:
    __slots__ = ("id", "kind", "span", "attrs", "children", "parent", "role")

    def __init__(self, kind: str, span: Span, attrs: dict[str, Any] | None = None,
                 children: list[Node] | None = None, role: str = ""):
        self.id = -1
        self.kind = kind
        self.span = span
        self.attrs = attrs or {}
        self.children = children or []
        self.parent: int | None = None
        self.role = role

    def __repr__(self) -> str:
        name = self.attrs.get("name") or self.attrs.get("id") or ""
        return f"<{self.kind}#{self.id} {name} {self.span}>"

    def get(self, role: str) -> list[Node]:
        return [c for c in self.children if c.role == role]

    def first(self, role: str) -> Node | None:
        for c in self.children:
            if c.role == role:
                return c
        return None

    @property
    def name(self) -> str | None:
        return self.attrs.get("name")

    def walk(self) -> Iterator[Node]:
        stack = [self]
        while stack:
            n = stack.pop()
            yield n
            stack.extend(reversed(n.children))

    def header_exprs(self) -> list[Node]:
        """Expression children evaluated by this statement itself (not its nested bodies)."""
        return [c for c in self.children if c.role not in BODY_ROLES and c.kind != "Param"]


@dataclass
class NormalizedAst:
    unit_id: str
    root: Node
    nodes: list[Node] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.nodes:
            self.nodes = _number(self.root)

    def node(self, nid: int) -> Node:
        return self.nodes[nid]

    def parent(self, node: Node) -> Node | None:
        return None if node.parent is None else self.nodes[node.parent]

    def ancestors(self, node: Node) -> Iterator[Node]:
        p = self.parent(node)
        while p is not None:
            yield p
            p = self.parent(p)

    def functions(self) -> list[tuple[str, Node]]:
        return [(q, n) for q, n in self.entities() if n.kind == "FunctionDef"]

    def classes(self) -> list[tuple[str, Node]]:
        return [(q, n) for q, n in self.entities() if n.kind == "ClassDef"]

    def entities(self) -> list[tuple[str, Node]]:
        """Qualified names of every class and function, in source order."""
        out: list[tuple[str, Node]] = []

        def visit(node: Node, prefix: str) -> None:
            for c in node.children:
                if c.kind in ("FunctionDef", "ClassDef"):
                    q = f"{prefix}{c.attrs['name']}"
                    out.append((q, c))
                    visit(c, q + ".")
                elif c.kind not in ("Param",):
                    visit(c, prefix)

        visit(self.root, "")
        return out

    def qualname(self, node: Node) -> str:
        parts = [node.attrs["name"]] if node.kind in ("FunctionDef", "ClassDef") else []
        for a in self.ancestors(node):
            if a.kind in ("FunctionDef", "ClassDef"):
                parts.append(a.attrs["name"])
        return ".".join(reversed(parts)) or "<module>"

    def enclosing_entity(self, node: Node) -> Node:
        for a in [node, *self.ancestors(node)]:
            if a.kind in ("FunctionDef", "ClassDef"):
                return a
        return self.root

    def enclosing_class(self, fn: Node) -> Node | None:
        p = self.parent(fn)
        return p if p is not None and p.kind == "ClassDef" else None

    def statements(self) -> Iterator[Node]:
        for n in self.nodes:
            if n.kind in STATEMENT_KINDS:
                yield n


def _number(root: Node) -> list[Node]:
    nodes: list[Node] = []
    stack: list[tuple[Node, int | None]] = [(root, None)]
    while stack:
        n, parent = stack.pop()
        n.id = len(nodes)
        n.parent = parent
        nodes.append(n)
        for c in reversed(n.children):
            stack.append((c, n.id))
    return nodes


# ---------------------------------------------------------------- front-ends


class Frontend(Protocol):
    language: str
    suffixes: tuple[str, ...]

    def tokenize(self, unit: SourceUnit) -> list[Token]: ...

    def parse(self, unit: SourceUnit) -> NormalizedAst: ...


_FRONTENDS: dict[str, Frontend] = {}


def register_frontend(frontend: Frontend) -> None:
    lang = frontend.language
    if lang != PYTHON_SUBSET and not lang.startswith("plugin:"):
        raise ValueError("plugin front-ends must use a 'plugin:<name>' language tag")
    _FRONTENDS[lang] = frontend


def get_frontend(language: str) -> Frontend:
    try:
        return _FRONTENDS[language]
    except KeyError:
        raise UnsupportedLanguage(language) from None


def frontend_for_suffix(suffix: str) -> Frontend | None:
    for fe in _FRONTENDS.values():
        if suffix in fe.suffixes:
            return fe
    return None


def parse(unit: SourceUnit) -> NormalizedAst:
    return get_frontend(unit.language).parse(unit)


# ------------------------------------------------------------ python subset

_BINOPS = {
    ast.Add: "+", ast.Sub: "-", ast.Mult: "*", ast.Div: "/", ast.FloorDiv: "//",
    ast.Mod: "%", ast.Pow: "**", ast.LShift: "<<", ast.RShift: ">>", ast.BitOr: "|",
    ast.BitXor: "^", ast.BitAnd: "&", ast.MatMult: "@",
}
_UNARY = {ast.Not: "not", ast.USub: "-", ast.UAdd: "+", ast.Invert: "~"}
_CMPOPS = {
    ast.Eq: "==", ast.NotEq: "!=", ast.Lt: "<", ast.LtE: "<=", ast.Gt: ">", ast.GtE: ">=",
    ast.Is: "is", ast.IsNot: "is not", ast.In: "in", ast.NotIn: "not in",
}


def dotted_name(node: Node | None) -> str | None:
    """``a.b.c`` for Name/Attribute chains, else None."""
    parts = []
    while node is not None and node.kind == "Attribute":
        parts.append(node.attrs["attr"])
        node = node.first("value")
    if node is None or node.kind != "Name":
        return None
    parts.append(node.attrs["id"])
    return ".".join(reversed(parts))


class _Lowering:
    def __init__(self, text: str):
        self.lines = text.splitlines()

    def col(self, lineno: int, byte_off: int) -> int:
        if lineno - 1 >= len(self.lines):
            return byte_off
        line = self.lines[lineno - 1]
        if line.isascii():
            return byte_off
        return len(line.encode("utf-8")[:byte_off].decode("utf-8", errors="ignore"))

    def span(self, n: ast.AST) -> Span:
        return Span(
            n.lineno, self.col(n.lineno, n.col_offset) + 1,
            n.end_lineno, self.col(n.end_lineno, n.end_col_offset),
        )

    def unsupported(self, n: ast.AST) -> ParseError:
        return ParseError(self.span(n), f"construct outside the supported subset: {type(n).__name__}")

    # statements ----------------------------------------------------------

    def module(self, tree: ast.Module) -> Node:
        if self.lines:
            span = Span(1, 1, len(self.lines), max(1, len(self.lines[-1])))
        else:
            span = Span(1, 1, 1, 1)
        return Node("Module", span, {}, self.body(tree.body, "body"))

    def body(self, stmts: list[ast.stmt], role: str) -> list[Node]:
        out = []
        for s in stmts:
            node = self.stmt(s)
            node.role = role
            out.append(node)
        return out

    def stmt(self, s: ast.stmt) -> Node:
        sp = self.span(s)
        if isinstance(s, ast.FunctionDef):
            params = self.params(s.args)
            decorators = [dotted_name(self.expr(d)) or "<expr>" for d in s.decorator_list]
            return Node("FunctionDef", sp, {"name": s.name, "decorators": decorators},
                        params + self.body(s.body, "body"))
        if isinstance(s, ast.ClassDef):
            bases = [self.expr(b, "base") for b in s.bases]
            return Node("ClassDef", sp, {"name": s.name, "bases": [dotted_name(b) for b in bases]},
                        bases + self.body(s.body, "body"))
        if isinstance(s, ast.Assign):
            kids = [self.expr(t, "target") for t in s.targets] + [self.expr(s.value, "value")]
            return Node("Assign", sp, {}, kids)
        if isinstance(s, ast.AnnAssign):
            if s.value is None:
                return Node("Pass", sp, {"annotationOnly": True})
            return Node("Assign", sp, {}, [self.expr(s.target, "target"), self.expr(s.value, "value")])
        if isinstance(s, ast.AugAssign):
            return Node("AugAssign", sp, {"op": _BINOPS[type(s.op)]},
                        [self.expr(s.target, "target"), self.expr(s.value, "value")])
        if isinstance(s, ast.If):
            return Node("If", sp, {}, [self.expr(s.test, "test")] + self.body(s.body, "body")
                        + self.body(s.orelse, "orelse"))
        if isinstance(s, ast.While):
            return Node("While", sp, {}, [self.expr(s.test, "test")] + self.body(s.body, "body")
                        + self.body(s.orelse, "orelse"))
        if isinstance(s, ast.For):
            return Node("For", sp, {}, [self.expr(s.target, "target"), self.expr(s.iter, "iter")]
                        + self.body(s.body, "body") + self.body(s.orelse, "orelse"))
        if isinstance(s, ast.Return):
            return Node("Return", sp, {}, [self.expr(s.value, "value")] if s.value else [])
        if isinstance(s, ast.Expr):
            return Node("ExprStmt", sp, {}, [self.expr(s.value, "value")])
        if isinstance(s, ast.Try):
            handlers = []
            for h in s.handlers:
                kids = [self.expr(h.type, "type")] if h.type is not None else []
                kids += self.body(h.body, "body")
                tname = dotted_name(kids[0]) if h.type is not None else None
                handlers.append(Node("ExceptHandler", self.span(h), {"type": tname, "name": h.name},
                                     kids, role="handler"))
            return Node("Try", sp, {}, self.body(s.body, "body") + handlers
                        + self.body(s.orelse, "orelse") + self.body(s.finalbody, "finalbody"))
        if isinstance(s, ast.Raise):
            kids = []
            if s.exc is not None:
                kids.append(self.expr(s.exc, "value"))
            if s.cause is not None:
                kids.append(self.expr(s.cause, "cause"))
            return Node("Raise", sp, {}, kids)
        if isinstance(s, ast.Import):
            names = [(a.name, a.asname) for a in s.names]
            bound = [a.asname or a.name.split(".")[0] for a in s.names]
            return Node("Import", sp, {"module": None, "names": names, "bound": bound})
        if isinstance(s, ast.ImportFrom):
            names = [(a.name, a.asname) for a in s.names]
            bound = [a.asname or a.name for a in s.names]
            return Node("Import", sp, {"module": "." * s.level + (s.module or ""), "names": names,
                                       "bound": bound})
        if isinstance(s, ast.Pass):
            return Node("Pass", sp)
        if isinstance(s, ast.Break):
            return Node("Break", sp)
        if isinstance(s, ast.Continue):
            return Node("Continue", sp)
        raise self.unsupported(s)

    def params(self, args: ast.arguments) -> list[Node]:
        out: list[Node] = []
        positional = list(args.posonlyargs) + list(args.args)
        defaults: list[ast.expr | None] = [None] * (len(positional) - len(args.defaults)) + list(args.defaults)
        for a, d in zip(positional, defaults):
            out.append(self.param(a, "arg", d))
        if args.vararg is not None:
            out.append(self.param(args.vararg, "vararg", None))
        for a, d in zip(args.kwonlyargs, args.kw_defaults):
            out.append(self.param(a, "kwonly", d))
        if args.kwarg is not None:
            out.append(self.param(args.kwarg, "kwarg", None))
        return out

    def param(self, a: ast.arg, kind: str, default: ast.expr | None) -> Node:
        sp = Span(a.lineno, self.col(a.lineno, a.col_offset) + 1, a.lineno,
                  self.col(a.lineno, a.col_offset) + len(a.arg))
        kids = []
        if default is not None:
            d = self.expr(default, "default")
            kids.append(d)
            sp = Span(sp.start_line, sp.start_col, d.span.end_line, d.span.end_col)
        return Node("Param", sp, {"name": a.arg, "kind": kind}, kids, role="param")

    # expressions ---------------------------------------------------------

    def expr(self, e: ast.expr, role: str = "") -> Node:
        node = self._expr(e)
        node.role = role
        return node

    def _expr(self, e: ast.expr) -> Node:
        sp = self.span(e)
        ctx = "store" if isinstance(getattr(e, "ctx", None), ast.Store) else "load"
        if isinstance(e, ast.Name):
            return Node("Name", sp, {"id": e.id, "ctx": ctx})
        if isinstance(e, ast.Constant):
            v = e.value
            if isinstance(v, bytes):
                v = v.decode("latin-1")
            elif v is Ellipsis:
                v = "..."
            elif isinstance(v, complex):
                v = repr(v)
            return Node("Literal", sp, {"value": v, "type": type(e.value).__name__})
        if isinstance(e, ast.Attribute):
            return Node("Attribute", sp, {"attr": e.attr, "ctx": ctx}, [self.expr(e.value, "value")])
        if isinstance(e, ast.Call):
            func = self.expr(e.func, "func")
            args = [self.expr(a, "arg") for a in e.args]
            kwargs = []
            names = []
            for k in e.keywords:
                kwargs.append(self.expr(k.value, "kwarg"))
                names.append(k.arg)
            return Node("Call", sp, {"callee": dotted_name(func), "keywords": names}, [func] + args + kwargs)
        if isinstance(e, ast.BinOp):
            return Node("BinOp", sp, {"op": _BINOPS[type(e.op)]},
                        [self.expr(e.left, "operand"), self.expr(e.right, "operand")])
        if isinstance(e, ast.BoolOp):
            op = "and" if isinstance(e.op, ast.And) else "or"
            return Node("BinOp", sp, {"op": op}, [self.expr(v, "operand") for v in e.values])
        if isinstance(e, ast.UnaryOp):
            return Node("BinOp", sp, {"op": _UNARY[type(e.op)], "unary": True},
                        [self.expr(e.operand, "operand")])
        if isinstance(e, ast.IfExp):
            return Node("BinOp", sp, {"op": "ifexp"},
                        [self.expr(e.body, "operand"), self.expr(e.test, "operand"),
                         self.expr(e.orelse, "operand")])
        if isinstance(e, ast.Compare):
            kids = [self.expr(e.left, "operand")] + [self.expr(c, "operand") for c in e.comparators]
            return Node("Compare", sp, {"ops": [_CMPOPS[type(o)] for o in e.ops]}, kids)
        if isinstance(e, ast.Subscript):
            return Node("Subscript", sp, {"ctx": ctx},
                        [self.expr(e.value, "value"), self.expr(e.slice, "index")])
        if isinstance(e, ast.Slice):
            parts = [p for p in (e.lower, e.upper, e.step) if p is not None]
            return Node("BinOp", sp, {"op": ":"}, [self.expr(p, "operand") for p in parts])
        if isinstance(e, ast.Starred):
            return Node("BinOp", sp, {"op": "*", "unary": True, "ctx": ctx}, [self.expr(e.value, "operand")])
        if isinstance(e, ast.JoinedStr):
            parts = []
            for v in e.values:
                if isinstance(v, ast.FormattedValue):
                    parts.append(self.expr(v.value, "operand"))
                else:
                    parts.append(self.expr(v, "operand"))
            return Node("BinOp", sp, {"op": "fstring"}, parts)
        if isinstance(e, (ast.Tuple, ast.List, ast.Set)):
            container = type(e).__name__.lower()
            return Node("Literal", sp, {"value": None, "type": container, "container": container, "ctx": ctx},
                        [self.expr(x, "elt") for x in e.elts])
        if isinstance(e, ast.Dict):
            kids = []
            for k, v in zip(e.keys, e.values):
                if k is None:
                    kids.append(self.expr(v, "elt"))
                else:
                    kids.append(self.expr(k, "key"))
                    kids.append(self.expr(v, "elt"))
            return Node("Literal", sp, {"value": None, "type": "dict", "container": "dict"}, kids)
        raise self.unsupported(e)


def _fstring_spans_ok(tree: ast.AST) -> None:
    # Python < 3.12 reports bogus positions for expressions nested in f-strings
    for node in ast.walk(tree):
        if isinstance(node, ast.JoinedStr):
            for sub in ast.walk(node):
                if sub is node or not hasattr(sub, "lineno"):
                    continue
                inside = (node.lineno, node.col_offset) <= (sub.lineno, sub.col_offset) and (
                    sub.end_lineno, sub.end_col_offset) <= (node.end_lineno, node.end_col_offset)
                if not inside:
                    sub.lineno, sub.col_offset = node.lineno, node.col_offset
                    sub.end_lineno, sub.end_col_offset = node.end_lineno, node.end_col_offset


class PythonSubsetFrontend:
    language = PYTHON_SUBSET
    suffixes = (".py",)

    def tokenize(self, unit: SourceUnit) -> list[Token]:
        return python_tokens(unit.text)

    def parse(self, unit: SourceUnit) -> NormalizedAst:
        try:
            tree = ast.parse(unit.text, filename=unit.path, type_comments=False)
        except SyntaxError as exc:
            line = exc.lineno or 1
            col = exc.offset or 1
            raise ParseError(Span(line, col, line, col), exc.msg) from None
        _fstring_spans_ok(tree)
        root = _Lowering(unit.text).module(tree)
        return NormalizedAst(unit.id, root)


register_frontend(PythonSubsetFrontend())
