"""Intraprocedural taint tracking over PDG data-dependence edges."""

from __future__ import annotations

from dataclasses import dataclass

from hybridscan.detection.model import CWE_RULE, Candidate, SinkPattern, TaintPolicy
from hybridscan.representation import FunctionView, Node, NormalizedAst
from hybridscan.representation.dataflow import stmt_defs
from hybridscan.representation.syntax import dotted_name

MAX_PATHS = 10_000


@dataclass(frozen=True)
class SinkSite:
    stmt: int
    call: int
    cwe: int
    callee: str


@dataclass(frozen=True)
class TaintPath:
    stmts: tuple[int, ...]
    vars: tuple[str, ...]
    sanitized: bool
    sink: SinkSite

    @property
    def source(self) -> int:
        return self.stmts[0]


def _calls(expr: Node):
    for n in expr.walk():
        if n.kind == "Call":
            yield n


def _header_nodes(stmt: Node):
    for e in stmt.header_exprs():
        yield from e.walk()


def _is_source_node(n: Node, policy: TaintPolicy) -> bool:
    if n.kind == "Call":
        return policy.source_call(n.attrs.get("callee"))
    return n.kind == "Attribute" and policy.source_attr(dotted_name(n))


def source_nodes(exprs: list[Node], policy: TaintPolicy) -> list[Node]:
    return [n for e in exprs for n in e.walk() if _is_source_node(n, policy)]


def is_source_stmt(stmt: Node, policy: TaintPolicy) -> bool:
    if stmt.kind == "Param":
        return policy.source_param(stmt.attrs["name"])
    return any(_is_source_node(n, policy) for n in _header_nodes(stmt))


def sink_args(call: Node, sink: SinkPattern) -> list[Node]:
    args = call.get("arg")
    if sink.arg is None:
        return args + call.get("kwarg")
    return args[sink.arg : sink.arg + 1]


def sinks_in(stmt: Node, policy: TaintPolicy) -> list[tuple[Node, SinkPattern]]:
    if stmt.kind == "Param":
        return []
    out = []
    for e in stmt.header_exprs():
        for c in _calls(e):
            s = policy.sink_for(c.attrs.get("callee"))
            if s is not None:
                out.append((c, s))
    return out


def _occurrences(exprs: list[Node], var: str) -> list[Node]:
    return [n for e in exprs for n in e.walk() if n.kind == "Name" and n.attrs["id"] == var
            and n.attrs.get("ctx") != "store"]


def _sanitized(tree: NormalizedAst, occ: Node, stop: Node, policy: TaintPolicy) -> bool:
    for a in tree.ancestors(occ):
        if a.kind == "Call" and policy.is_sanitizer(a.attrs.get("callee")):
            func = a.first("func")
            if func is None or not any(x is occ for x in func.walk()):
                return True
        if a is stop:
            return False
    return False


def _origin_sanitized(tree: NormalizedAst, exprs: list[Node], stop: Node, policy: TaintPolicy) -> bool | None:
    """None: no source in ``exprs``; else whether every source occurrence sits under a sanitizer."""
    occ = source_nodes(exprs, policy)
    if not occ:
        return None
    return all(_sanitized(tree, o, stop, policy) for o in occ)


def _flow(tree: NormalizedAst, exprs: list[Node], var: str, stop: Node, policy: TaintPolicy) -> bool | None:
    """None: ``var`` does not reach the expressions; else whether every use is sanitized."""
    occ = _occurrences(exprs, var)
    if not occ:
        return None
    return all(_sanitized(tree, o, stop, policy) for o in occ)


def taint_analyze(tree: NormalizedAst, view: FunctionView, policy: TaintPolicy) -> list[TaintPath]:
    pdg = view.pdg
    nodes = {s: tree.node(s) for s in pdg.nodes}
    sink_sites: dict[int, list[tuple[Node, SinkPattern]]] = {s: sinks_in(n, policy) for s, n in nodes.items()}
    paths: list[TaintPath] = []

    def site(stmt: int, call: Node, sink: SinkPattern) -> SinkSite:
        return SinkSite(stmt, call.id, sink.cwe, call.attrs.get("callee") or "")

    def dfs(chain: list[int], vars_: list[str], sanitized: bool) -> None:
        if len(paths) >= MAX_PATHS:
            return
        cur = chain[-1]
        for v in stmt_defs(nodes[cur]):
            for e in pdg.data_out(cur):
                if e.var != v:
                    continue
                t = e.dst
                tn = nodes[t]
                for call, sink in sink_sites[t]:
                    f = _flow(tree, sink_args(call, sink), v, call, policy)
                    if f is not None:
                        paths.append(TaintPath(tuple(chain + [t]), tuple(vars_ + [v]), sanitized or f, site(t, call, sink)))
                if t in chain or not stmt_defs(tn):
                    continue
                f = _flow(tree, tn.header_exprs(), v, tn, policy)
                if f is None:
                    continue
                dfs(chain + [t], vars_ + [v], sanitized or f)

    for s in sorted(nodes):
        n = nodes[s]
        if not is_source_stmt(n, policy):
            continue
        for call, sink in sink_sites[s]:
            f = _origin_sanitized(tree, sink_args(call, sink), call, policy)
            if f is not None:
                paths.append(TaintPath((s,), (), f, site(s, call, sink)))
        origin = False if n.kind == "Param" else bool(_origin_sanitized(tree, n.header_exprs(), n, policy))
        dfs([s], [], origin)

    def key(p: TaintPath):
        return (tree.node(p.source).span, tree.node(p.sink.stmt).span, p.sink.call, p.stmts, p.vars)

    return sorted(set(paths), key=key)


def detect_injection(path: str, tree: NormalizedAst, view: FunctionView, paths: list[TaintPath]) -> list[Candidate]:
    """One candidate per (sink statement, CWE); every unsanitized path feeding it is evidence."""
    groups: dict[tuple[int, int], list[TaintPath]] = {}
    for p in paths:
        if p.sanitized:
            continue
        groups.setdefault((p.sink.stmt, p.sink.cwe), []).append(p)
    out = []
    for (stmt, cwe), ps in sorted(groups.items(), key=lambda kv: (tree.node(kv[0][0]).span, kv[0][1])):
        sink_node = tree.node(stmt)
        ev = {
            "sink": ps[0].sink.callee,
            "cwe": cwe,
            "paths": [
                {
                    "stmts": list(p.stmts),
                    "vars": list(p.vars),
                    "lines": [tree.node(s).span.start_line for s in p.stmts],
                    "spans": [tree.node(s).span.to_dict() for s in p.stmts],
                }
                for p in ps
            ],
        }
        out.append(Candidate(CWE_RULE[cwe], path, sink_node.span, view.qualname, view.node.span, 1.0, ev))
    return out
