"""Brute-force reference implementations used to cross-check the analyses.

Def-use facts per statement come from the library; everything built on top of
them (statement-level control flow, def-clear path search, taint chains and
sanitizer checks) is recomputed here independently of the fixed-point solver
and the PDG-driven taint walk.
"""

from __future__ import annotations

from hybridscan.detection.model import TaintPolicy
from hybridscan.representation import FunctionView, Node, NormalizedAst
from hybridscan.representation.dataflow import stmt_defs, stmt_uses
from hybridscan.representation.syntax import dotted_name


def statement_successors(view: FunctionView) -> dict[int, set[int]]:
    """Successor statements; empty blocks are looked through."""
    cfg = view.cfg

    def firsts(bid: str, seen: frozenset[str]) -> set[int]:
        block = cfg.blocks[bid]
        if block.stmts:
            return {block.stmts[0]}
        out: set[int] = set()
        for e in cfg.succ(bid):
            if e.dst not in seen:
                out |= firsts(e.dst, seen | {e.dst})
        return out

    succ: dict[int, set[int]] = {}
    for bid, block in cfg.blocks.items():
        for a, b in zip(block.stmts, block.stmts[1:]):
            succ[a] = {b}
        if block.stmts:
            tail: set[int] = set()
            for e in cfg.succ(bid):
                tail |= firsts(e.dst, frozenset({e.dst}))
            succ[block.stmts[-1]] = tail
    return succ


def data_deps(tree: NormalizedAst, view: FunctionView) -> set[tuple[int, int, str]]:
    """(def, use, var) triples joined by at least one definition-clear path."""
    succ = statement_successors(view)
    stmts = view.cfg.statements()
    defs = {s: set(stmt_defs(tree.node(s))) for s in stmts}
    uses = {s: set(stmt_uses(tree.node(s))) for s in stmts}
    out: set[tuple[int, int, str]] = set()
    for d in stmts:
        for v in defs[d]:
            # walk every path leaving d; a path stops at the first redefinition of v
            stack = list(succ.get(d, ()))
            seen: set[int] = set()
            while stack:
                s = stack.pop()
                if s in seen:
                    continue
                seen.add(s)
                if v in uses[s]:
                    out.add((d, s, v))
                if v in defs[s]:
                    continue
                stack.extend(succ.get(s, ()))
    return out


def _loads(exprs: list[Node], var: str) -> list[Node]:
    found = []
    stack = list(exprs)
    while stack:
        n = stack.pop()
        if n.kind == "Name" and n.attrs["id"] == var and n.attrs.get("ctx") != "store":
            found.append(n)
        stack.extend(n.children)
    return found


def _under_sanitizer(tree: NormalizedAst, node: Node, stop: Node, policy: TaintPolicy) -> bool:
    child = node
    cur = tree.parent(node)
    while cur is not None:
        if cur.kind == "Call" and policy.is_sanitizer(cur.attrs.get("callee")):
            func = cur.first("func")
            if func is None or child is not func:
                return True
        if cur is stop:
            return False
        child, cur = cur, tree.parent(cur)
    return False


def _sources(exprs: list[Node], policy: TaintPolicy) -> list[Node]:
    found = []
    stack = list(exprs)
    while stack:
        n = stack.pop()
        if (n.kind == "Call" and policy.source_call(n.attrs.get("callee"))) or \
                (n.kind == "Attribute" and policy.source_attr(dotted_name(n))):
            found.append(n)
        stack.extend(n.children)
    return found


def _sink_calls(stmt: Node, policy: TaintPolicy) -> list[tuple[Node, list[Node], int]]:
    if stmt.kind == "Param":
        return []
    out = []
    stack = list(stmt.header_exprs())
    while stack:
        n = stack.pop()
        if n.kind == "Call":
            sink = policy.sink_for(n.attrs.get("callee"))
            if sink is not None:
                args = n.get("arg")
                picked = args + n.get("kwarg") if sink.arg is None else args[sink.arg:sink.arg + 1]
                out.append((n, picked, sink.cwe))
        stack.extend(n.children)
    return out


def taint_paths(tree: NormalizedAst, view: FunctionView, policy: TaintPolicy) -> set[tuple]:
    """Every (stmts, vars, sanitized, sink stmt, sink call, cwe) chain from a source statement to a sink."""
    deps = data_deps(tree, view)
    stmts = view.cfg.statements()
    nodes = {s: tree.node(s) for s in stmts}
    out: set[tuple] = set()

    def is_source(n: Node) -> bool:
        if n.kind == "Param":
            return policy.source_param(n.attrs["name"])
        return bool(_sources(n.header_exprs(), policy))

    def flows(exprs: list[Node], var: str, stop: Node) -> bool | None:
        occ = _loads(exprs, var)
        if not occ:
            return None
        return all(_under_sanitizer(tree, o, stop, policy) for o in occ)

    def extend(chain: tuple[int, ...], vars_: tuple[str, ...], sanitized: bool) -> None:
        cur = chain[-1]
        for v in stmt_defs(nodes[cur]):
            for d, u, var in sorted(deps):
                if d != cur or var != v:
                    continue
                for call, args, cwe in _sink_calls(nodes[u], policy):
                    f = flows(args, v, call)
                    if f is not None:
                        out.add((chain + (u,), vars_ + (v,), sanitized or f, u, call.id, cwe))
                if u in chain or not stmt_defs(nodes[u]):
                    continue
                f = flows(nodes[u].header_exprs(), v, nodes[u])
                if f is not None:
                    extend(chain + (u,), vars_ + (v,), sanitized or f)

    for s in stmts:
        n = nodes[s]
        if not is_source(n):
            continue
        for call, args, cwe in _sink_calls(n, policy):
            src = _sources(args, policy)
            if src:
                out.add(((s,), (), all(_under_sanitizer(tree, o, call, policy) for o in src), s, call.id, cwe))
        if n.kind == "Param":
            origin = False
        else:
            src = _sources(n.header_exprs(), policy)
            origin = bool(src) and all(_under_sanitizer(tree, o, n, policy) for o in src)
        extend((s,), (), origin)
    return out
