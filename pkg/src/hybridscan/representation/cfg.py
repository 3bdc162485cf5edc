"""Control-flow graphs over normalized function bodies."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from hybridscan.representation.syntax import PREDICATE_KINDS, Node, NormalizedAst

ENTRY = "entry"
EXIT = "exit"


class EdgeKind(str, Enum):
    SEQ = "Seq"
    TRUE = "TrueBranch"
    FALSE = "FalseBranch"
    LOOP_BACK = "LoopBack"
    EXCEPTION = "Exception"


@dataclass
class Block:
    id: str
    stmts: list[int] = field(default_factory=list)
    dead: bool = False


@dataclass(frozen=True)
class Edge:
    src: str
    dst: str
    kind: EdgeKind


@dataclass
class Cfg:
    """Basic blocks plus synthetic entry/exit.

    The entry block carries the parameter definitions so that parameters take
    part in dataflow like any other definition.
    """

    function: int
    blocks: dict[str, Block]
    edges: list[Edge]
    entry: str = ENTRY
    exit: str = EXIT

    def __post_init__(self) -> None:
        self._succ: dict[str, list[Edge]] = {b: [] for b in self.blocks}
        self._pred: dict[str, list[Edge]] = {b: [] for b in self.blocks}
        for e in self.edges:
            self._succ[e.src].append(e)
            self._pred[e.dst].append(e)
        self._block_of = {s: b.id for b in self.blocks.values() for s in b.stmts}

    def succ(self, bid: str) -> list[Edge]:
        return self._succ[bid]

    def pred(self, bid: str) -> list[Edge]:
        return self._pred[bid]

    def basic_blocks(self) -> list[Block]:
        return [b for b in self.blocks.values() if b.id not in (self.entry, self.exit)]

    def block_of(self, stmt: int) -> str:
        return self._block_of[stmt]

    def statements(self) -> list[int]:
        return [s for b in self.blocks.values() for s in b.stmts]

    def predicate_blocks(self, tree: NormalizedAst) -> list[Block]:
        return [b for b in self.blocks.values() if b.stmts and tree.node(b.stmts[-1]).kind in PREDICATE_KINDS]


@dataclass
class _Loop:
    header: str
    breaks: list[str] = field(default_factory=list)


@dataclass
class _TryCtx:
    blocks: list[str] = field(default_factory=list)


class _Builder:
    def __init__(self, fn: Node):
        self.fn = fn
        self.blocks: dict[str, Block] = {}
        self.edges: list[Edge] = []
        self.loops: list[_Loop] = []
        self.tries: list[_TryCtx] = []
        self.counter = 0
        params = [c.id for c in fn.children if c.kind == "Param"]
        self.blocks[ENTRY] = Block(ENTRY, params)

    def new_block(self) -> str:
        bid = f"B{self.counter}"
        self.counter += 1
        self.blocks[bid] = Block(bid)
        if self.tries:
            self.tries[-1].blocks.append(bid)
        return bid

    def edge(self, src: str | None, dst: str, kind: EdgeKind = EdgeKind.SEQ) -> None:
        if src is not None:
            self.edges.append(Edge(src, dst, kind))

    def append(self, cur: str | None, stmt: Node) -> str:
        if cur is None:
            cur = self.new_block()
        self.blocks[cur].stmts.append(stmt.id)
        return cur

    def fresh_or_reuse(self, cur: str | None) -> str:
        if cur is not None and not self.blocks[cur].stmts:
            return cur
        nb = self.new_block()
        self.edge(cur, nb)
        return nb

    def build(self) -> Cfg:
        first = self.new_block()
        self.edge(ENTRY, first)
        end = self.seq(self.fn.get("body"), first)
        self.blocks[EXIT] = Block(EXIT)
        self.edge(end, EXIT)
        order = [ENTRY] + [b for b in self.blocks if b not in (ENTRY, EXIT)] + [EXIT]
        blocks = {b: self.blocks[b] for b in order}
        cfg = Cfg(self.fn.id, blocks, self.edges)
        reachable = {ENTRY}
        stack = [ENTRY]
        while stack:
            b = stack.pop()
            for e in cfg.succ(b):
                if e.dst not in reachable:
                    reachable.add(e.dst)
                    stack.append(e.dst)
        for b in blocks.values():
            b.dead = b.id not in reachable
        return cfg

    def seq(self, stmts: list[Node], cur: str | None) -> str | None:
        for s in stmts:
            cur = self.stmt(s, cur)
        return cur

    def stmt(self, s: Node, cur: str | None) -> str | None:
        k = s.kind
        if k == "Return":
            cur = self.append(cur, s)
            self.edge(cur, EXIT)
            return None
        if k == "Raise":
            cur = self.append(cur, s)
            if not self.tries:
                self.edge(cur, EXIT, EdgeKind.EXCEPTION)
            return None
        if k == "Break":
            cur = self.append(cur, s)
            self.loops[-1].breaks.append(cur)
            return None
        if k == "Continue":
            cur = self.append(cur, s)
            self.edge(cur, self.loops[-1].header, EdgeKind.LOOP_BACK)
            return None
        if k == "If":
            return self.if_(s, cur)
        if k in ("While", "For"):
            return self.loop(s, cur)
        if k == "Try":
            return self.try_(s, cur)
        return self.append(cur, s)

    def if_(self, s: Node, cur: str | None) -> str:
        pred = self.append(cur, s)
        then = self.new_block()
        self.edge(pred, then, EdgeKind.TRUE)
        then_end = self.seq(s.get("body"), then)
        orelse = s.get("orelse")
        else_end = None
        if orelse:
            els = self.new_block()
            self.edge(pred, els, EdgeKind.FALSE)
            else_end = self.seq(orelse, els)
        join = self.new_block()
        self.edge(then_end, join)
        if orelse:
            self.edge(else_end, join)
        else:
            self.edge(pred, join, EdgeKind.FALSE)
        return join

    def loop(self, s: Node, cur: str | None) -> str:
        header = self.fresh_or_reuse(cur)
        self.blocks[header].stmts.append(s.id)
        loop = _Loop(header)
        self.loops.append(loop)
        body = self.new_block()
        self.edge(header, body, EdgeKind.TRUE)
        body_end = self.seq(s.get("body"), body)
        self.edge(body_end, header, EdgeKind.LOOP_BACK)
        self.loops.pop()
        orelse = s.get("orelse")
        else_end = None
        if orelse:
            els = self.new_block()
            self.edge(header, els, EdgeKind.FALSE)
            else_end = self.seq(orelse, els)
        after = self.new_block()
        if orelse:
            self.edge(else_end, after)
        else:
            self.edge(header, after, EdgeKind.FALSE)
        for b in loop.breaks:
            self.edge(b, after)
        return after

    def try_(self, s: Node, cur: str | None) -> str | None:
        ctx = _TryCtx()
        start = self.fresh_or_reuse(cur)
        self.tries.append(ctx)
        ctx.blocks.append(start)
        body_end = self.seq(s.get("body"), start)
        self.tries.pop()
        handler_entries: list[str] = []
        ends: list[str | None] = []
        for h in s.get("handler"):
            hb = self.new_block()
            handler_entries.append(hb)
            self.blocks[hb].stmts.append(h.id)
            ends.append(self.seq(h.get("body"), hb))
        orelse = s.get("orelse")
        if orelse:
            els = self.fresh_or_reuse(body_end) if body_end is not None else None
            if els is not None:
                body_end = self.seq(orelse, els)
        ends.insert(0, body_end)
        finalbody = s.get("finalbody")
        join = self.new_block()
        for e in ends:
            self.edge(e, join)
        targets = handler_entries or ([join] if finalbody else [])
        for b in dict.fromkeys(ctx.blocks):
            for t in targets:
                self.edge(b, t, EdgeKind.EXCEPTION)
        if finalbody:
            return self.seq(finalbody, join)
        return join


def build_cfg(tree: NormalizedAst, fn: Node) -> Cfg:
    assert fn.kind == "FunctionDef", f"expected FunctionDef, got {fn.kind}"
    return _Builder(fn).build()
