"""Program views: tokens, normalized AST, CFG, PDG and metrics."""

from __future__ import annotations

from dataclasses import dataclass, field

from hybridscan.representation.cfg import Cfg, EdgeKind, build_cfg
from hybridscan.representation.dataflow import DefUseIndex, reaching_definitions
from hybridscan.representation.export import UnknownFormat, export_graph
from hybridscan.representation.metrics import MetricVector, compute_metrics
from hybridscan.representation.pdg import Pdg, build_pdg
from hybridscan.representation.source import PYTHON_SUBSET, SourceUnit, Span, UnsupportedLanguage
from hybridscan.representation.syntax import Node, NormalizedAst, parse, register_frontend
from hybridscan.representation.tokens import LexError, ParseError, Token, TokenKind, tokenize


@dataclass
class FunctionView:
    qualname: str
    node: Node
    cfg: Cfg
    defuse: DefUseIndex
    pdg: Pdg


@dataclass
class UnitViews:
    unit: SourceUnit
    tokens: list[Token]
    tree: NormalizedAst
    functions: dict[int, FunctionView] = field(default_factory=dict)
    _metrics: dict[int, MetricVector] = field(default_factory=dict, repr=False)

    def metrics(self, entity: Node) -> MetricVector:
        if entity.id not in self._metrics:
            self._metrics[entity.id] = compute_metrics(self.tree, entity, self.unit.text)
        return self._metrics[entity.id]

    def function_of(self, node: Node) -> FunctionView | None:
        for a in [node, *self.tree.ancestors(node)]:
            if a.kind == "FunctionDef":
                return self.functions.get(a.id)
        return None


def function_view(tree: NormalizedAst, qualname: str, fn: Node) -> FunctionView:
    cfg = build_cfg(tree, fn)
    du = reaching_definitions(tree, cfg)
    return FunctionView(qualname, fn, cfg, du, build_pdg(tree, fn, cfg, du))


def build_views(unit: SourceUnit) -> UnitViews:
    """Tokenize, parse and build per-function graphs; raises ParseError."""
    tree = parse(unit)
    tokens = tokenize(unit)
    views = UnitViews(unit, tokens, tree)
    for q, fn in tree.functions():
        views.functions[fn.id] = function_view(tree, q, fn)
    return views


__all__ = [
    "Cfg", "DefUseIndex", "EdgeKind", "FunctionView", "LexError", "MetricVector", "Node",
    "NormalizedAst", "ParseError", "Pdg", "PYTHON_SUBSET", "SourceUnit", "Span", "Token",
    "TokenKind", "UnitViews", "UnknownFormat", "UnsupportedLanguage", "build_cfg", "build_pdg",
    "build_views", "compute_metrics", "export_graph", "function_view", "parse",
    "reaching_definitions", "register_frontend", "tokenize",
]
