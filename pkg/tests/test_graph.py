import json

import pytest
from hypothesis import given, strategies as st

from graphforms import BUILTIN_NAMES, Graph
from graphforms.errors import DomainError, ParseError


def test_parse_edge_list_basics():
    g = Graph.parse_edge_list("# comment\na b\nb c\n\nlonely\na c\n")
    assert g.n == 4
    assert g.labels == ("a", "b", "c", "lonely")
    assert g.edges == ((0, 1), (0, 2), (1, 2))
    assert g.degree(3) == 0


def test_parse_edge_list_duplicate_edges_collapse():
    g = Graph.parse_edge_list("a b\nb a\na b\n")
    assert g.edge_count == 1


def test_parse_edge_list_accepts_bytes():
    g = Graph.parse_edge_list(b"x y\n")
    assert g.n == 2


@pytest.mark.parametrize(
    "text,line",
    [
        ("a b c\n", 1),
        ("ok ok2\nu u\n", 2),
        ("a b\n\nx y z w\n", 3),
    ],
)
def test_parse_edge_list_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as exc:
        Graph.parse_edge_list(text)
    assert exc.value.context["line"] == line
    assert str(line) in str(exc.value)


def test_self_loop_rejected():
    with pytest.raises(ParseError, match="self-loop"):
        Graph.parse_edge_list("v v\n")
    with pytest.raises(ParseError, match="self-loop"):
        Graph(["a"], [(0, 0)])


def test_constructor_validation():
    with pytest.raises(ParseError, match="duplicate"):
        Graph(["a", "a"], [])
    with pytest.raises(ParseError, match="non-empty"):
        Graph(["a", ""], [])
    with pytest.raises(DomainError, match="out of range"):
        Graph(["a", "b"], [(0, 5)])
    with pytest.raises(DomainError):
        Graph(["a", "b"], [("a", "b")])


def test_adjacency_queries():
    g = Graph.builtin("C4")
    assert g.neighbors(0) == (1, 3)
    assert g.adjacent(0, 1) and not g.adjacent(0, 2)
    assert g.adjacent(1, 0)
    assert g.degree(2) == 2
    assert g.id_of("3") == 3
    assert g.label(3) == "3"
    with pytest.raises(DomainError):
        g.id_of("nope")
    with pytest.raises(DomainError):
        g.neighbors(99)


def test_edge_text_round_trip_preserves_ids():
    g = Graph.parse_edge_list("c a\nb a\n")
    back = Graph.parse_edge_list(g.to_edge_text())
    assert back == g
    assert back.labels == g.labels


def test_edge_text_rejects_unrepresentable_labels():
    g = Graph(["has space", "b"], [(0, 1)])
    with pytest.raises(DomainError, match="not representable"):
        g.to_edge_text()


def test_json_round_trip_and_canonical_text():
    g = Graph(["u", "v", "w"], [(2, 0), (0, 1)])
    obj = g.to_json()
    assert obj == {"vertices": ["u", "v", "w"], "edges": [["u", "v"], ["u", "w"]]}
    assert Graph.from_json(obj) == g
    text = g.to_json_text()
    assert text == json.dumps(obj, indent=2) + "\n"
    assert Graph.from_json_text(text) == g


@pytest.mark.parametrize(
    "obj,msg",
    [
        ([], "must be an object"),
        ({"edges": []}, "vertices"),
        ({"vertices": ["a", "a"], "edges": []}, "duplicate"),
        ({"vertices": ["a", 3], "edges": []}, "label"),
        ({"vertices": ["a", "b"], "edges": [["a"]]}, "pair"),
        ({"vertices": ["a", "b"], "edges": [["a", "z"]]}, "undeclared"),
        ({"vertices": ["a", "b"], "edges": [["a", "a"]]}, "self-loop"),
    ],
)
def test_json_validation(obj, msg):
    with pytest.raises(ParseError, match=msg):
        Graph.from_json(obj)


def test_from_json_text_reports_bad_json():
    with pytest.raises(ParseError, match="invalid JSON"):
        Graph.from_json_text("{nope")


def test_builtin_shapes():
    p = Graph.builtin("petersen")
    assert p.n == 10 and p.edge_count == 15
    assert all(p.degree(v) == 3 for v in range(10))
    o = Graph.builtin("octahedron")
    assert o.n == 6 and o.edge_count == 12
    assert all(o.degree(v) == 4 for v in range(6))
    # antipodal pairs are the only non-edges
    assert not any(o.adjacent(i, i + 3) for i in range(3))
    assert Graph.builtin("K5").edge_count == 10
    assert Graph.builtin("C6").edge_count == 6
    assert set(BUILTIN_NAMES) >= {"K3", "C4", "petersen", "octahedron"}
    with pytest.raises(DomainError, match="unknown builtin"):
        Graph.builtin("K99")
    with pytest.raises(DomainError):
        Graph.cycle(2)


# Labels drawn without '#' or whitespace so both text formats apply.
_label = st.text(
    st.characters(min_codepoint=33, max_codepoint=126, blacklist_characters="#"),
    min_size=1,
    max_size=6,
)


@given(st.data())
def test_round_trips_on_random_graphs(data):
    labels = data.draw(st.lists(_label, min_size=1, max_size=8, unique=True))
    n = len(labels)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = data.draw(st.lists(st.sampled_from(pairs), max_size=12)) if pairs else []
    g = Graph(labels, edges)
    assert Graph.parse_edge_list(g.to_edge_text()) == g
    assert Graph.from_json_text(g.to_json_text()) == g
    # serialization is canonical: equal graphs emit identical bytes
    g2 = Graph(labels, list(reversed(edges)))
    assert g2.to_json_text() == g.to_json_text()
    assert g2.to_edge_text() == g.to_edge_text()
