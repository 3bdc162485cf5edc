"""Program dependence graph: data edges from reaching definitions, control
edges from structured nesting."""

from __future__ import annotations

from dataclasses import dataclass, field

from hybridscan.representation.cfg import Cfg
from hybridscan.representation.dataflow import DefUseIndex
from hybridscan.representation.syntax import PREDICATE_KINDS, Node, NormalizedAst

DATA = "DataDep"
CONTROL = "ControlDep"


@dataclass(frozen=True, order=True)
class PdgEdge:
    src: int
    dst: int
    kind: str
    var: str | None = None


@dataclass
class Pdg:
    function: int
    nodes: list[int]
    edges: list[PdgEdge] = field(default_factory=list)

    def __post_init__(self) -> None:
        self._out: dict[int, list[PdgEdge]] = {n: [] for n in self.nodes}
        self._in: dict[int, list[PdgEdge]] = {n: [] for n in self.nodes}
        for e in self.edges:
            self._out[e.src].append(e)
            self._in[e.dst].append(e)

    def data_edges(self) -> list[PdgEdge]:
        return [e for e in self.edges if e.kind == DATA]

    def control_edges(self) -> list[PdgEdge]:
        return [e for e in self.edges if e.kind == CONTROL]

    def data_out(self, node: int) -> list[PdgEdge]:
        return [e for e in self._out[node] if e.kind == DATA]

    def data_in(self, node: int) -> list[PdgEdge]:
        return [e for e in self._in[node] if e.kind == DATA]


def _governing_predicate(tree: NormalizedAst, node: Node, fn: Node) -> Node | None:
    child = node
    for anc in tree.ancestors(node):
        if anc.id == fn.id:
            return None
        if anc.kind in PREDICATE_KINDS and child.role in ("body", "orelse"):
            return anc
        child = anc
    return None


def build_pdg(tree: NormalizedAst, fn: Node, cfg: Cfg, defuse: DefUseIndex) -> Pdg:
    assert cfg.function == fn.id, "cfg and function disagree"
    nodes = sorted(cfg.statements())
    edges = {PdgEdge(d, u, DATA, v) for d, u, v in defuse.pairs()}
    for s in nodes:
        p = _governing_predicate(tree, tree.node(s), fn)
        if p is not None:
            edges.add(PdgEdge(p.id, s, CONTROL))
    return Pdg(fn.id, nodes, sorted(edges))
