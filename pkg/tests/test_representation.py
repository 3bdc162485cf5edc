import json

import pytest

from conftest import FIXTURES, ROOT, UNITS, unit, views
from oracles import data_deps
from hybridscan.representation import (
    EdgeKind, LexError, ParseError, SourceUnit, TokenKind, UnknownFormat, UnsupportedLanguage,
    build_views, compute_metrics, export_graph, parse, tokenize,
)


def fn_view(v, name):
    return next(f for f in v.functions.values() if f.qualname == name)


# tokens

def test_tokenize_assignment():
    toks = tokenize(unit("x = 1"))
    assert [(t.kind, t.lexeme) for t in toks] == [
        (TokenKind.IDENTIFIER, "x"), (TokenKind.OPERATOR, "="), (TokenKind.NUMBER, "1")]


def test_tokenize_empty():
    assert tokenize(unit("")) == []


def test_tokenize_concat_by_hand():
    toks = tokenize(unit('s = "a" + name'))
    assert len(toks) == 5
    assert toks[2].kind is TokenKind.STRING and toks[2].lexeme == '"a"'
    assert (toks[4].span.start_col, toks[4].span.end_col) == (11, 14)


def test_tokenize_illegal_character():
    with pytest.raises(LexError):
        tokenize(unit("x = 1 ?"))


def test_unknown_language():
    with pytest.raises(UnsupportedLanguage):
        parse(SourceUnit.from_text("x", "t.rb", "ruby"))


# syntax

def test_parse_function_return_literal():
    tree = parse(unit("def f():\n  return 1\n"))
    fn = tree.root.children[0]
    assert fn.kind == "FunctionDef" and fn.attrs["name"] == "f"
    ret = fn.get("body")[0]
    assert ret.kind == "Return" and ret.children[0].kind == "Literal" and ret.children[0].attrs["value"] == 1


def test_parse_stray_paren():
    with pytest.raises(ParseError):
        parse(unit("x = 1)\n"))


@pytest.mark.parametrize("src", [
    "with open(p) as f:\n    pass\n",
    "xs = [i for i in range(3)]\n",
    "f = lambda: 1\n",
    "async def f():\n    pass\n",
    "def f():\n    global g\n",
])
def test_parse_rejects_outside_subset(src):
    with pytest.raises(ParseError):
        parse(unit(src))


def test_class_with_two_methods():
    tree = parse(unit("class A:\n    def a(self):\n        return 1\n\n    def b(self):\n        return 2\n"))
    cls = tree.root.children[0]
    assert cls.kind == "ClassDef"
    assert [c.attrs["name"] for c in cls.children if c.kind == "FunctionDef"] == ["a", "b"]
    assert [q for q, _ in tree.functions()] == ["A.a", "A.b"]


# control flow

def test_straight_line_cfg():
    f = fn_view(views("def f():\n    a = 1\n    b = 2\n    c = 3\n"), "f")
    assert len(f.cfg.basic_blocks()) == 1
    assert len(f.cfg.edges) == 2


def test_if_else_cfg():
    f = fn_view(views("def f(c):\n    if c:\n        x = 1\n    else:\n        x = 2\n    return x\n"), "f")
    assert len(f.cfg.basic_blocks()) == 4
    kinds = {e.kind for e in f.cfg.edges}
    assert EdgeKind.TRUE in kinds and EdgeKind.FALSE in kinds


def test_while_break_cfg():
    src = "def f():\n    x = 1\n    while x:\n        if x > 3:\n            break\n        x = x + 1\n    return x\n"
    f = fn_view(views(src), "f")
    edges = {(e.src, e.dst, e.kind) for e in f.cfg.edges}
    # hand-drawn: B0 init, B1 loop test, B2 inner test, B3 break, B4 increment, B5 return
    assert edges == {
        ("entry", "B0", EdgeKind.SEQ), ("B0", "B1", EdgeKind.SEQ), ("B1", "B2", EdgeKind.TRUE),
        ("B2", "B3", EdgeKind.TRUE), ("B2", "B4", EdgeKind.FALSE), ("B4", "B1", EdgeKind.LOOP_BACK),
        ("B1", "B5", EdgeKind.FALSE), ("B3", "B5", EdgeKind.SEQ), ("B5", "exit", EdgeKind.SEQ),
    }


# dataflow

def line_defs(v, f, var, use_line):
    stmt = next(s for s in f.cfg.statements() if v.tree.node(s).span.start_line == use_line)
    return sorted(v.tree.node(d).span.start_line for d in f.defuse.reaching_defs(stmt, var))


def test_reaching_straight():
    v = views("def f():\n    x = 1\n    y = x\n")
    assert line_defs(v, fn_view(v, "f"), "x", 3) == [2]


def test_reaching_branch_join():
    v = views("def f(c):\n    x = 1\n    if c:\n        x = 2\n    y = x\n")
    assert line_defs(v, fn_view(v, "f"), "x", 5) == [2, 4]


def test_reaching_loop_self():
    v = views("def f(n):\n    i = 0\n    while i < n:\n        i = i + 1\n    return i\n")
    assert line_defs(v, fn_view(v, "f"), "i", 4) == [2, 4]


def test_defs_before_statement_without_use():
    v = views("def f():\n    x = 1\n    y = 2\n    return y\n")
    f = fn_view(v, "f")
    stmt = next(s for s in f.cfg.statements() if v.tree.node(s).span.start_line == 4)
    assert [v.tree.node(d).span.start_line for d in f.defuse.defs_before(stmt, "x")] == [2]


def test_suite_is_large_and_small_enough(suite_views):
    assert len(suite_views.functions) >= 30
    assert all(len(f.cfg.blocks) <= 12 for f in suite_views.functions.values())


def test_data_deps_match_oracle(suite_views):
    for f in suite_views.functions.values():
        got = {(e.src, e.dst, e.var) for e in f.pdg.data_edges()}
        assert got == data_deps(suite_views.tree, f), f.qualname


# program dependence

def test_pdg_straight_line():
    f = fn_view(views("def f():\n    x = 1\n    y = x\n"), "f")
    assert len(f.pdg.data_edges()) == 1
    assert not [e for e in f.pdg.edges if e.kind == "ControlDep"]


def test_pdg_control_dep():
    v = views("def f(c):\n    if c:\n        y = 1\n")
    f = fn_view(v, "f")
    ctl = [(v.tree.node(e.src).kind, v.tree.node(e.dst).span.start_line) for e in f.pdg.edges if e.kind == "ControlDep"]
    assert ctl == [("If", 3)]


def test_pdg_taint_chain(suite_views):
    f = fn_view(suite_views, "straight")
    lines = {(suite_views.tree.node(e.src).span.start_line, suite_views.tree.node(e.dst).span.start_line)
             for e in f.pdg.data_edges()}
    assert {(5, 6), (6, 7)} <= lines


# metrics

def metrics_of(src, name):
    v = views(src)
    return v.metrics(fn_view(v, name).node)


def test_cc_if_and_for():
    m = metrics_of("def f(xs):\n    if xs:\n        pass\n    for x in xs:\n        pass\n", "f")
    assert m.cc == 3


def test_pass_function():
    m = metrics_of("def f():\n    pass\n", "f")
    assert (m.cc, m.nos) == (1, 1)


def test_god_class_fixture_metrics():
    v = build_views(SourceUnit.from_path(UNITS / "smells" / "god_class_inventory.py"))
    cls = next(n for q, n in v.tree.classes() if q == "InventoryManager")
    m = v.metrics(cls)
    assert (m.nom, m.wmc) == (17, 51)


# export

def test_dot_single_block():
    f = fn_view(views("def f():\n    return 1\n"), "f")
    dot = export_graph(f.cfg, "dot")
    assert dot.count("[label=") - dot.count("->") == 3
    assert export_graph(f.cfg, "dot") == dot


def test_pdg_json_matches_edges(suite_views):
    f = fn_view(suite_views, "two_vars")
    doc = json.loads(export_graph(f.pdg, "json", suite_views.tree))
    edges = {(e["from"], e["to"], e["kind"], e.get("var")) for e in doc["edges"]}
    assert edges == {(f"s{e.src}", f"s{e.dst}", e.kind, e.var) for e in f.pdg.edges}


def test_unknown_export_format():
    f = fn_view(views("def f():\n    return 1\n"), "f")
    with pytest.raises(UnknownFormat):
        export_graph(f.cfg, "svg")
