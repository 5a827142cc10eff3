import json

import pytest
from hypothesis import given, settings, strategies as st

from coxkit.diagram import (INF, CoxeterDiagram, Edge, diagram_from_json, diagram_to_json,
                            finiteness_check, load_diagram, parse_diagram, split_at_labeled_edge,
                            tree_path)
from coxkit.errors import CoxkitError, DiagramParseError, DisconnectedDiagramError

from graphgen import LABELS_34INF, diagram_classes


def test_parse_two_vertices_labeled_edge():
    d = parse_diagram("vertex a\nvertex b\nedge a b 4")
    assert d.vertices == ("a", "b")
    assert d.edges == (Edge("a", "b", 4),)
    assert d.m("a", "b") == 4 and d.m("a", "a") == 1


def test_parse_labeled_example(fixtures_dir):
    d = load_diagram(fixtures_dir / "ex2.cox")
    assert len(d) == 5 and len(d.edges) == 4
    assert d.labeled_edges == (Edge("2", "3", 4),)


def test_implicit_vertices_default_label_and_comments():
    d = parse_diagram("# header\nedge x y   # trailing\n\nedge y z inf\n")
    assert d.vertices == ("x", "y", "z")
    assert d.m("x", "y") == 3 and d.m("y", "z") == INF and d.m("x", "z") == 2


@pytest.mark.parametrize("text, line, column, fragment", [
    ("edge a a", 1, 8, "self-loop"),
    ("vertex a\nvertex a", 2, 8, "duplicate vertex"),
    ("edge a b\nedge b a", 2, 1, "duplicate edge"),
    ("edge a b 2", 1, 10, "label must be >= 3"),
    ("edge a b x", 1, 10, "invalid label"),
    ("edge a b-c", 1, 8, "invalid name"),
    ("node a", 1, 1, "unknown keyword"),
    ("vertex", 1, 7, "expected: vertex"),
    ("\n  edge a", 2, 9, "expected: edge"),
])
def test_parse_errors_carry_position(text, line, column, fragment):
    with pytest.raises(DiagramParseError) as info:
        parse_diagram(text)
    err = info.value
    assert (err.line, err.column) == (line, column)
    assert fragment in str(err)
    assert str(err).startswith(f"line {line}, column {column}:")


def test_constructor_validation():
    with pytest.raises(CoxkitError):
        CoxeterDiagram(("a", "a"))
    with pytest.raises(CoxkitError):
        CoxeterDiagram(("a",), (("a", "b", 3),))
    with pytest.raises(CoxkitError):
        CoxeterDiagram(("a", "b"), (("a", "b", 2),))
    with pytest.raises(CoxkitError):
        CoxeterDiagram(("a", "b"), (("a", "b", 3.5),))


def test_edges_normalized_to_declaration_order():
    d = CoxeterDiagram(("a", "b", "c"), (("c", "a", 3), ("b", "a", 5)))
    assert d.edges == (Edge("a", "b", 5), Edge("a", "c", 3))
    assert d.neighbors("a") == ("b", "c")


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.sampled_from(diagram_classes(n, LABELS_34INF))))
def test_text_and_json_round_trip(d):
    assert parse_diagram(d.to_text()) == d
    assert diagram_from_json(json.dumps(diagram_to_json(d))) == d


def test_json_encodes_infinity_as_string():
    d = parse_diagram("edge a b inf")
    assert diagram_to_json(d) == {"vertices": ["a", "b"], "edges": [{"u": "a", "v": "b", "m": "inf"}]}


# -- finiteness ---------------------------------------------------------------

def test_finite_star(fixtures_dir):
    v = finiteness_check(load_diagram(fixtures_dir / "ex1.cox"))
    assert v and v.to_json() == {"finite": True, "reason": None}


def test_triangle_cycle(fixtures_dir):
    v = finiteness_check(load_diagram(fixtures_dir / "affine_triangle.cox"))
    assert not v and v.reason.kind == "cycle"
    assert v.to_json() == {"finite": False, "reason": {"cycle": ["a", "b", "c"]}}


def test_two_labeled_edges_on_path():
    v = finiteness_check(parse_diagram("edge a b 4\nedge b c 5\nedge c d"))
    assert v.reason.kind == "two_labeled_edges"
    assert v.to_json()["reason"]["two_labeled_edges"] == [{"u": "a", "v": "b", "m": 4},
                                                          {"u": "b", "v": "c", "m": 5}]


def test_infinite_label():
    v = finiteness_check(parse_diagram("edge a b inf"))
    assert v.reason.kind == "infinite_label" and v.reason.edge == Edge("a", "b", INF)


def test_witness_priority_cycle_before_labels():
    v = finiteness_check(parse_diagram("edge a b inf\nedge b c 4\nedge c a 5"))
    assert v.reason.kind == "cycle"


def test_finiteness_needs_connected_diagram():
    with pytest.raises(DisconnectedDiagramError):
        finiteness_check(parse_diagram("vertex a\nvertex b"))
    with pytest.raises(DisconnectedDiagramError):
        finiteness_check(CoxeterDiagram(()))


# -- splitting and paths -------------------------------------------------------

def test_split_labeled_example(fixtures_dir):
    sp = split_at_labeled_edge(load_diagram(fixtures_dir / "ex2.cox"))
    assert (sp.s, sp.t, sp.label) == ("2", "3", 4)
    assert sp.gamma_s.vertices == ("1", "2") and sp.gamma_t.vertices == ("3", "4", "5")
    assert sp.pi["1"] == "2" and sp.pi["4"] == "3"


def test_split_single_edge():
    sp = split_at_labeled_edge(parse_diagram("edge s t 7"))
    assert sp.gamma_s.vertices == ("s",) and sp.gamma_t.vertices == ("t",)


@pytest.mark.parametrize("text, fragment", [
    ("edge a b\nedge b c", "no labeled edge"),
    ("edge a b 4\nedge b c 4", "more than one"),
    ("edge a b inf", "infinite label"),
    ("edge a b 4\nedge b c\nedge c a", "not a tree"),
])
def test_split_preconditions(text, fragment):
    with pytest.raises(CoxkitError, match=fragment):
        split_at_labeled_edge(parse_diagram(text))


def test_tree_path(fixtures_dir):
    star = load_diagram(fixtures_dir / "ex1.cox")
    assert tree_path(star, "4", "5") == ["4", "5"]
    assert tree_path(star, "1", "1") == ["1"]
    assert tree_path(load_diagram(fixtures_dir / "ex2.cox"), "1", "5") == ["1", "2", "3", "5"]
