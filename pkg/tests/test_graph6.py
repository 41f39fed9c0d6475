import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toughgraph.errors import Graph6Error, UnsupportedSizeError
from toughgraph.graph import Graph, complete_graph, cycle_graph, empty_graph
from toughgraph.graph6 import (
    emit_edge_list,
    emit_graph6,
    parse_edge_list,
    parse_graph6,
    read_graph6_stream,
)


def reference_encode(g: Graph) -> str:
    """Independent re-derivation of the format from its bit layout: build
    the upper-triangle bit string column by column, pad to a multiple of
    six, and add 63 to each 6-bit group."""
    bits = ""
    for j in range(1, g.n):
        for i in range(j):
            bits += "1" if g.has_edge(i, j) else "0"
    while len(bits) % 6:
        bits += "0"
    out = chr(63 + g.n)
    for k in range(0, len(bits), 6):
        out += chr(63 + int(bits[k : k + 6], 2))
    return out


def test_k2_is_A_underscore():
    assert emit_graph6(complete_graph(2)) == "A_"
    assert parse_graph6("A_") == complete_graph(2)


def test_empty_two_vertices():
    assert parse_graph6("A?") == empty_graph(2)
    assert emit_graph6(empty_graph(2)) == "A?"


def test_k1_is_at_sign():
    assert parse_graph6("@") == empty_graph(1)
    assert emit_graph6(empty_graph(1)) == "@"


def test_c4_round_trip():
    c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert parse_graph6(emit_graph6(c4)) == c4


def test_against_reference_encoder():
    rng = random.Random(42)
    for _ in range(300):
        n = rng.randint(0, 14)
        g = Graph(
            n,
            [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4],
        )
        assert emit_graph6(g) == reference_encode(g)


def test_header_prefix_accepted():
    assert parse_graph6(">>graph6<<A_") == complete_graph(2)


def test_errors_carry_offsets():
    with pytest.raises(Graph6Error) as exc:
        parse_graph6("A_X")  # trailing garbage
    assert "offset 2" in str(exc.value)
    with pytest.raises(Graph6Error) as exc:
        parse_graph6("B")  # truncated body
    assert "truncated" in str(exc.value)
    with pytest.raises(Graph6Error) as exc:
        parse_graph6(chr(20) + "_")  # header byte below 63
    assert "offset 0" in str(exc.value)
    with pytest.raises(Graph6Error) as exc:
        parse_graph6("B" + chr(40))  # body byte below 63
    assert "offset 1" in str(exc.value)


def test_long_form_unsupported():
    with pytest.raises(UnsupportedSizeError):
        parse_graph6("~" + "?" * 10)


def test_non_ascii_rejected():
    with pytest.raises(Graph6Error) as exc:
        parse_graph6("Aé")
    assert "offset 1" in str(exc.value)


def test_nonzero_padding_rejected():
    # C3 on 3 vertices uses 3 bits; the trailing 3 bits must be zero
    line = emit_graph6(cycle_graph(3))
    corrupted = line[:-1] + chr(ord(line[-1]) ^ 1)
    with pytest.raises(Graph6Error):
        parse_graph6(corrupted)


def test_emit_rejects_oversize():
    with pytest.raises(UnsupportedSizeError):
        emit_graph6(empty_graph(63))


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=20), st.randoms(use_true_random=False))
def test_round_trip_property(n, rnd):
    g = Graph(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rnd.random() < 0.5]
    )
    assert parse_graph6(emit_graph6(g)) == g


def test_stream_single(tmp_path):
    path = tmp_path / "one.g6"
    path.write_text("A_\n")
    graphs = list(read_graph6_stream(path))
    assert graphs == [complete_graph(2)]


def test_stream_empty(tmp_path):
    path = tmp_path / "empty.g6"
    path.write_text("")
    assert list(read_graph6_stream(path)) == []


def test_stream_skip_and_log(tmp_path, caplog):
    path = tmp_path / "mixed.g6"
    path.write_text("A_\n!!bad!!\nA?\n")
    with caplog.at_level("WARNING"):
        graphs = list(read_graph6_stream(path, skip_errors=True))
    assert len(graphs) == 2
    assert any("line 2" in rec.getMessage() for rec in caplog.records)


def test_stream_fail_fast(tmp_path):
    path = tmp_path / "mixed.g6"
    path.write_text("A_\n!!bad!!\nA?\n")
    with pytest.raises(Graph6Error) as exc:
        list(read_graph6_stream(path))
    assert "line 2" in str(exc.value)


def test_edge_list_round_trip():
    g = cycle_graph(5)
    text = emit_edge_list(g)
    assert text.splitlines()[0] == "5 5"
    assert parse_edge_list(text) == g


def test_edge_list_errors():
    with pytest.raises(ValueError):
        parse_edge_list("3")
    with pytest.raises(ValueError):
        parse_edge_list("3 2 0 1")  # one pair short
