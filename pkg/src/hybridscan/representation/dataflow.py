"""Definitions, uses and reaching definitions over a CFG."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from hybridscan.representation.cfg import Cfg
from hybridscan.representation.syntax import Node, NormalizedAst


def _store_names(target: Node, out: list[str]) -> None:
    if target.kind == "Name":
        out.append(target.attrs["id"])
    elif target.kind == "Literal" and target.attrs.get("container") in ("tuple", "list"):
        for c in target.children:
            _store_names(c, out)
    elif target.kind == "BinOp" and target.attrs.get("op") == "*" and target.attrs.get("unary"):
        _store_names(target.children[0], out)


def _load_names(expr: Node, out: list[str]) -> None:
    for n in expr.walk():
        if n.kind == "Name" and n.attrs.get("ctx") != "store":
            out.append(n.attrs["id"])


def _target_uses(target: Node, out: list[str]) -> None:
    """Names read while storing into ``target`` (bases of attribute/subscript stores)."""
    if target.kind == "Name":
        return
    if target.kind == "Literal" and target.attrs.get("container"):
        for c in target.children:
            _target_uses(c, out)
        return
    if target.kind == "BinOp" and target.attrs.get("unary"):
        _target_uses(target.children[0], out)
        return
    _load_names(target, out)
    if target.kind in ("Attribute", "Subscript"):
        base = target.first("value")
        while base is not None and base.kind in ("Attribute", "Subscript"):
            base = base.first("value")
        if base is not None and base.kind == "Name" and base.attrs.get("ctx") == "store":
            out.append(base.attrs["id"])


def _dedupe(xs: list[str]) -> tuple[str, ...]:
    return tuple(dict.fromkeys(xs))


def stmt_defs(node: Node) -> tuple[str, ...]:
    k = node.kind
    out: list[str] = []
    if k == "Param":
        out.append(node.attrs["name"])
    elif k in ("Assign", "AugAssign", "For"):
        for t in node.get("target"):
            _store_names(t, out)
    elif k == "ExceptHandler":
        if node.attrs.get("name"):
            out.append(node.attrs["name"])
    elif k == "Import":
        out.extend(node.attrs["bound"])
    elif k in ("FunctionDef", "ClassDef"):
        out.append(node.attrs["name"])
    return _dedupe(out)


def stmt_uses(node: Node) -> tuple[str, ...]:
    k = node.kind
    out: list[str] = []
    if k in ("Param", "Import", "FunctionDef", "Try", "Pass", "Break", "Continue"):
        return ()
    if k in ("Assign", "For"):
        for c in node.header_exprs():
            if c.role == "target":
                _target_uses(c, out)
            else:
                _load_names(c, out)
        return _dedupe(out)
    if k == "AugAssign":
        t = node.first("target")
        if t.kind == "Name":
            out.append(t.attrs["id"])
        else:
            _target_uses(t, out)
        _load_names(node.first("value"), out)
        return _dedupe(out)
    if k == "ClassDef":
        for b in node.get("base"):
            _load_names(b, out)
        return _dedupe(out)
    for c in node.header_exprs():
        _load_names(c, out)
    return _dedupe(out)


@dataclass
class DefUseIndex:
    defs: dict[str, list[int]] = field(default_factory=dict)
    uses: dict[str, list[int]] = field(default_factory=dict)
    reaching: dict[tuple[int, str], frozenset[int]] = field(default_factory=dict)
    # definitions live on entry to each statement, used or not
    live_in: dict[int, frozenset[tuple[int, str]]] = field(default_factory=dict)

    def pairs(self) -> set[tuple[int, int, str]]:
        """All (def statement, use statement, variable) triples."""
        return {(d, u, v) for (u, v), ds in self.reaching.items() for d in ds}

    def reaching_defs(self, use: int, var: str) -> frozenset[int]:
        return self.reaching.get((use, var), frozenset())

    def defs_before(self, stmt: int, var: str) -> frozenset[int]:
        return frozenset(d for d, v in self.live_in.get(stmt, ()) if v == var)


def reaching_definitions(tree: NormalizedAst, cfg: Cfg) -> DefUseIndex:
    """Iterate the forward may-reach equations to a fixed point."""
    facts = {s: (stmt_defs(tree.node(s)), stmt_uses(tree.node(s))) for s in cfg.statements()}

    gen: dict[str, dict[str, int]] = {}
    killed: dict[str, set[str]] = {}
    for bid, block in cfg.blocks.items():
        g: dict[str, int] = {}
        for s in block.stmts:
            for v in facts[s][0]:
                g[v] = s
        gen[bid] = g
        killed[bid] = set(g)

    out: dict[str, frozenset[tuple[int, str]]] = {b: frozenset() for b in cfg.blocks}
    inn: dict[str, frozenset[tuple[int, str]]] = {b: frozenset() for b in cfg.blocks}
    order = list(cfg.blocks)
    changed = True
    while changed:
        changed = False
        for bid in order:
            new_in = frozenset().union(*(out[e.src] for e in cfg.pred(bid)))
            new_out = frozenset(d for d in new_in if d[1] not in killed[bid]) | frozenset(
                (s, v) for v, s in gen[bid].items()
            )
            inn[bid] = new_in
            if new_out != out[bid]:
                out[bid] = new_out
                changed = True

    index = DefUseIndex()
    defs: dict[str, list[int]] = defaultdict(list)
    uses: dict[str, list[int]] = defaultdict(list)
    for bid in order:
        live: dict[str, set[int]] = defaultdict(set)
        for s, v in inn[bid]:
            live[v].add(s)
        for s in cfg.blocks[bid].stmts:
            d, u = facts[s]
            index.live_in[s] = frozenset((x, v) for v, xs in live.items() for x in xs)
            for v in u:
                uses[v].append(s)
                index.reaching[(s, v)] = frozenset(live.get(v, ()))
            for v in d:
                defs[v].append(s)
                live[v] = {s}
    index.defs = {v: sorted(ss) for v, ss in sorted(defs.items())}
    index.uses = {v: sorted(ss) for v, ss in sorted(uses.items())}
    return index
