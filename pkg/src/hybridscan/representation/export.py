"""DOT and JSON renderings of CFGs and PDGs."""

from __future__ import annotations

import json

from hybridscan.representation.cfg import Cfg
from hybridscan.representation.pdg import Pdg
from hybridscan.representation.source import Span
from hybridscan.representation.syntax import NormalizedAst

FORMATS = ("dot", "json")


class UnknownFormat(ValueError):
    pass


def _cover(spans: list[Span]) -> Span | None:
    if not spans:
        return None
    start = min(spans)
    end = max(spans, key=lambda s: s.end)
    return Span(start.start_line, start.start_col, end.end_line, end.end_col)


def graph_dict(g: Cfg | Pdg, tree: NormalizedAst | None = None) -> dict:
    nodes = []
    edges = []
    if isinstance(g, Cfg):
        for b in g.blocks.values():
            span = _cover([tree.node(s).span for s in b.stmts]) if tree is not None else None
            label = b.id
            if tree is not None and b.stmts:
                label += ": " + "; ".join(f"{tree.node(s).kind}@{tree.node(s).span.start_line}" for s in b.stmts)
            nodes.append({"id": b.id, "label": label, "span": span.to_dict() if span else None,
                          "dead": b.dead})
        for e in g.edges:
            edges.append({"from": e.src, "to": e.dst, "kind": e.kind.value})
    elif isinstance(g, Pdg):
        for s in g.nodes:
            if tree is not None:
                n = tree.node(s)
                nodes.append({"id": f"s{s}", "label": f"{n.kind}@{n.span.start_line}", "span": n.span.to_dict()})
            else:
                nodes.append({"id": f"s{s}", "label": f"s{s}", "span": None})
        for e in g.edges:
            item = {"from": f"s{e.src}", "to": f"s{e.dst}", "kind": e.kind}
            if e.var is not None:
                item["var"] = e.var
            edges.append(item)
    else:
        raise TypeError(f"cannot export {type(g).__name__}")
    return {"nodes": nodes, "edges": edges}


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def export_graph(g: Cfg | Pdg, format: str = "dot", tree: NormalizedAst | None = None) -> str:
    if format not in FORMATS:
        raise UnknownFormat(format)
    data = graph_dict(g, tree)
    if format == "json":
        return json.dumps(data, indent=2, sort_keys=True) + "\n"
    name = "cfg" if isinstance(g, Cfg) else "pdg"
    lines = [f"digraph {name} {{"]
    for n in data["nodes"]:
        lines.append(f'  "{n["id"]}" [label="{_dot_escape(n["label"])}"];')
    for e in data["edges"]:
        label = e["kind"] + (f"({e['var']})" if "var" in e else "")
        style = ' style="dashed"' if e["kind"] in ("ControlDep", "Exception") else ""
        lines.append(f'  "{e["from"]}" -> "{e["to"]}" [label="{_dot_escape(label)}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
