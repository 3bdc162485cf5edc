"""Extract-method refactoring driven by reaching definitions."""

from __future__ import annotations

from dataclasses import dataclass

from hybridscan.repair.patch import Edit, Patch, PatchKind
from hybridscan.representation import FunctionView, Node, NormalizedAst, SourceUnit, Span
from hybridscan.representation.dataflow import stmt_defs
from hybridscan.representation.metrics import SELF_NAMES
from hybridscan.representation.syntax import STATEMENT_KINDS

MIN_REGION_STATEMENTS = 3
MIN_STRAIGHT_RUN = 5
SIMPLE_KINDS = frozenset({"Assign", "AugAssign", "ExprStmt", "Import", "Pass", "Raise"})
INDENT = "    "


class NoExtractableRegion(ValueError):
    pass


@dataclass(frozen=True)
class Region:
    """Consecutive sibling statements of one body."""

    stmts: tuple[Node, ...]

    @property
    def span(self) -> Span:
        a, b = self.stmts[0].span, self.stmts[-1].span
        return Span(a.start_line, a.start_col, b.end_line, b.end_col)

    def nodes(self):
        for s in self.stmts:
            yield from s.walk()

    def ids(self) -> set[int]:
        return {n.id for n in self.nodes()}

    def size(self) -> int:
        return sum(1 for n in self.nodes() if n.kind in STATEMENT_KINDS)


@dataclass(frozen=True)
class Signature:
    params: tuple[str, ...]
    returns: tuple[str, ...]


def region_signature(tree: NormalizedAst, view: FunctionView, region: Region) -> Signature:
    """Parameters are live into the region; returns are defined inside and read after it."""
    inside = region.ids()
    order = {n.id: i for i, n in enumerate(region.nodes())}
    params: dict[str, int] = {}
    returns: dict[str, int] = {}
    for (use, var), defs in view.defuse.reaching.items():
        if use in inside:
            if any(d not in inside for d in defs):
                params[var] = min(params.get(var, 1 << 30), order[use])
        elif any(d in inside for d in defs):
            first_def = min(order[d] for d in defs if d in inside)
            returns[var] = min(returns.get(var, 1 << 30), first_def)
    # a returned name the region may leave untouched keeps its incoming value
    definite = {v for s in region.stmts if s.kind in ("Assign", "AugAssign", "Import") for v in stmt_defs(s)}
    for var in returns:
        if var in definite or var in params:
            continue
        outside = any(d not in inside for (u, v), ds in view.defuse.reaching.items()
                      if v == var and u not in inside and any(x in inside for x in ds) for d in ds)
        if outside:
            params[var] = len(order)
    ordered = lambda d: tuple(sorted(d, key=lambda v: (d[v], v)))  # noqa: E731
    return Signature(ordered(params), ordered(returns))


def _escapes(region: Region, tree: NormalizedAst) -> str | None:
    inside = region.ids()
    for n in region.nodes():
        if n.kind == "Return":
            return f"return at line {n.span.start_line}"
        if n.kind in ("FunctionDef", "ClassDef"):
            return f"nested definition at line {n.span.start_line}"
        if n.kind in ("Break", "Continue"):
            loop = next((a for a in tree.ancestors(n) if a.kind in ("While", "For")), None)
            if loop is None or loop.id not in inside:
                return f"{n.kind.lower()} at line {n.span.start_line} leaves the region"
    return None


def _owns_lines(unit: SourceUnit, region: Region) -> bool:
    lines = unit.lines
    sp = region.span
    head = lines[sp.start_line - 1][: sp.start_col - 1]
    tail = lines[sp.end_line - 1][sp.end_col:].strip()
    if head.strip() or (tail and not tail.startswith("#")):
        return False
    return not lines[sp.start_line - 1].lstrip().startswith("elif")


def check_region(unit: SourceUnit, tree: NormalizedAst, region: Region) -> None:
    why = _escapes(region, tree)
    if why is None and not _owns_lines(unit, region):
        why = "region shares its lines with other code"
    if why is not None:
        raise NoExtractableRegion(why)


def _bodies(fn: Node):
    """Every statement list inside ``fn`` (nested definitions excluded)."""
    yield fn, "body", fn.get("body")
    stack = list(fn.get("body"))
    while stack:
        n = stack.pop()
        if n.kind in ("FunctionDef", "ClassDef"):
            continue
        for role in ("body", "orelse", "finalbody"):
            kids = n.get(role)
            if kids:
                yield n, role, kids
                stack.extend(kids)
        for h in n.get("handler"):
            yield h, "body", h.get("body")
            stack.extend(h.get("body"))


def candidate_regions(unit: SourceUnit, tree: NormalizedAst, fn: Node) -> list[Region]:
    """Whole If/For/While bodies and maximal straight-line runs that can be extracted."""
    found: dict[tuple[int, ...], Region] = {}
    whole = tuple(s.id for s in fn.get("body"))
    for owner, role, body in _bodies(fn):
        if owner.kind in ("If", "While", "For"):
            if role == "body" or owner.kind == "If":
                found.setdefault(tuple(s.id for s in body), Region(tuple(body)))
        run: list[Node] = []
        for s in [*body, None]:
            if s is not None and s.kind in SIMPLE_KINDS:
                run.append(s)
                continue
            if len(run) >= MIN_STRAIGHT_RUN:
                found.setdefault(tuple(x.id for x in run), Region(tuple(run)))
            run = []
    out = []
    for key, region in found.items():
        if key == whole or region.size() < MIN_REGION_STATEMENTS:
            continue
        try:
            check_region(unit, tree, region)
        except NoExtractableRegion:
            continue
        out.append(region)
    return sorted(out, key=lambda r: r.span)


def _taken_names(tree: NormalizedAst) -> set[str]:
    names = set()
    for n in tree.nodes:
        if n.kind in ("FunctionDef", "ClassDef"):
            names.add(n.attrs["name"])
        elif n.kind == "Name":
            names.add(n.attrs["id"])
    return names


def helper_name(tree: NormalizedAst, fn: Node, index: int = 1) -> str:
    taken = _taken_names(tree)
    base = "_" + fn.attrs["name"].lstrip("_")
    k = index
    while f"{base}_part{k}" in taken:
        k += 1
    return f"{base}_part{k}"


def _reindent(lines: list[str], old: str, new: str) -> list[str]:
    out = []
    for line in lines:
        if not line.strip():
            out.append("")
        elif line.startswith(old):
            out.append(new + line[len(old):])
        else:
            out.append(line)
    return out


def extract_method(unit: SourceUnit, tree: NormalizedAst, view: FunctionView, region: Region,
                   name: str | None = None) -> tuple[Patch, Signature]:
    fn = view.node
    owner = tree.parent(fn)
    if owner is None or owner.kind not in ("Module", "ClassDef"):
        raise NoExtractableRegion("only module-level functions and methods are supported")
    check_region(unit, tree, region)
    sig = region_signature(tree, view, region)

    receiver = None
    if owner.kind == "ClassDef":
        first = next((p for p in fn.children if p.kind == "Param"), None)
        if first is None or first.attrs["name"] not in SELF_NAMES:
            raise NoExtractableRegion("static methods are not supported")
        receiver = first.attrs["name"]
    params = [p for p in sig.params if p != receiver]
    name = name or helper_name(tree, fn)

    lines = unit.lines
    sp = region.span
    region_indent = lines[sp.start_line - 1][: sp.start_col - 1]
    fn_indent = lines[fn.span.start_line - 1][: fn.span.start_col - 1]
    body_indent = fn_indent + INDENT

    body = _reindent(lines[sp.start_line - 1 : sp.end_line], region_indent, body_indent)
    if sig.returns:
        body.append(f"{body_indent}return {', '.join(sig.returns)}")
    head = []
    if receiver == "cls":
        head.append(f"{fn_indent}@classmethod")
    formal = ([receiver] if receiver else []) + params
    head.append(f"{fn_indent}def {name}({', '.join(formal)}):")
    gap = "\n" if owner.kind == "ClassDef" else "\n\n"
    helper = gap + "\n" + "\n".join(head + body)

    call = f"{receiver}.{name}" if receiver else name
    call = f"{call}({', '.join(params)})"
    if sig.returns:
        call = f"{', '.join(sig.returns)} = {call}"
    last = lines[sp.end_line - 1]
    edits = (
        Edit(Span(sp.start_line, sp.start_col, sp.end_line, len(last)), call),
        Edit.insert(fn.span.end_line, len(lines[fn.span.end_line - 1]) + 1, helper),
    )
    desc = (f"Extract lines {sp.start_line}-{sp.end_line} of {view.qualname} into {name}"
            f"({', '.join(params)})" + (f" returning {', '.join(sig.returns)}" if sig.returns else ""))
    return Patch(edits, desc, PatchKind.EXTRACT_METHOD), sig
