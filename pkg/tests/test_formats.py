import pytest
from hypothesis import given

from oracles import graphs
from tdc.errors import ParseError
from tdc.formats import from_edge_list, from_graph6, read_graph6_file, to_edge_list, to_graph6
from tdc.graph import Graph, complete, cycle, path


def test_edge_list_example():
    assert from_edge_list("3\n0 1\n1 2") == path(3)
    assert from_edge_list("3\n\n0 1\n\n1 2\n") == path(3)
    assert from_edge_list("2") == Graph(2)


@given(graphs())
def test_edge_list_round_trip(g):
    assert from_edge_list(to_edge_list(g)) == g


@pytest.mark.parametrize("text,line", [
    ("", 1),
    ("x\n0 1", 1),
    ("3\n0 1\n0 1", 3),
    ("3\n0 1\n1 0", 3),
    ("3\n0 3", 2),
    ("3\n1 1", 2),
    ("3\n0 1 2", 2),
    ("3\n0 a", 2),
])
def test_edge_list_errors_carry_line(text, line):
    with pytest.raises(ParseError) as exc:
        from_edge_list(text)
    assert exc.value.line == line


def _graph6_by_hand(g):
    # written out from the format description: N(n), then upper-triangle bits
    # column by column, grouped in sixes big-endian, each group + 63
    bits = "".join("1" if g.has_edge(i, j) else "0" for j in range(1, g.n) for i in range(j))
    bits += "0" * (-len(bits) % 6)
    return chr(g.n + 63) + "".join(chr(int(bits[k:k + 6], 2) + 63) for k in range(0, len(bits), 6))


def test_graph6_triangle():
    assert _graph6_by_hand(complete(3)) == "Bw"
    assert to_graph6(complete(3)) == "Bw"


@given(graphs(max_n=12))
def test_graph6_matches_hand_encoding(g):
    assert to_graph6(g) == _graph6_by_hand(g)


@given(graphs(max_n=12))
def test_graph6_round_trip(g):
    assert from_graph6(to_graph6(g)) == g


def test_graph6_cycle6_round_trip():
    assert from_graph6(to_graph6(cycle(6))) == cycle(6)


def test_graph6_known_strings():
    # reference strings from the format's documentation examples
    assert to_graph6(Graph(0)) == "?"
    assert to_graph6(Graph(1)) == "@"
    assert from_graph6(">>graph6<<Bw") == complete(3)


@pytest.mark.parametrize("text,pos", [("", 1), ("B", 2), ("Bww", 3), ("B\x01", 2), ("Bx", 2)])
def test_graph6_errors(text, pos):
    with pytest.raises(ParseError) as exc:
        from_graph6(text)
    assert exc.value.position == pos


def test_graph6_file_reports_line():
    assert read_graph6_file("Bw\n\nA_\n") == [complete(3), path(2)]
    with pytest.raises(ParseError) as exc:
        read_graph6_file("Bw\nB\n")
    assert exc.value.line == 2
