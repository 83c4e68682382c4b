import random

import pytest
from hypothesis import given, strategies as st

from kemeny.graph import complement, from_edge_list
from kemeny.graph6 import CodecError, emit_graph6, iter_graph6_lines, parse_graph6

# frozen encodings, checked against the format definition by hand
KNOWN = [
    ("A_", 2, [(0, 1)]),
    ("A?", 2, []),
    ("Bw", 3, [(0, 1), (0, 2), (1, 2)]),
    ("Bg", 3, [(0, 1), (1, 2)]),
    ("F~~~w", 7, [(i, j) for i in range(7) for j in range(i + 1, 7)]),
]


@pytest.mark.parametrize("code,n,edges", KNOWN)
def test_known_encodings(code, n, edges):
    g = from_edge_list(n, edges)
    assert emit_graph6(g) == code
    assert parse_graph6(code) == g


def test_prefix_and_whitespace_tolerated():
    assert parse_graph6(">>graph6<<A_\n").m == 1
    assert parse_graph6(b"A_").m == 1


def test_single_vertex():
    g = parse_graph6("@")
    assert g.n == 1 and g.m == 0
    assert emit_graph6(g) == "@"


@given(st.integers(min_value=1, max_value=20), st.randoms(use_true_random=False))
def test_roundtrip_random(n, rnd):
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rnd.random() < 0.4
    ]
    g = from_edge_list(n, edges)
    assert parse_graph6(emit_graph6(g)) == g


def test_roundtrip_survives_complement():
    rnd = random.Random(7)
    for _ in range(25):
        n = rnd.randint(2, 30)
        edges = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if rnd.random() < 0.3
        ]
        g = complement(from_edge_list(n, edges))
        assert parse_graph6(emit_graph6(g)) == g


def test_rejects_garbage():
    with pytest.raises(CodecError):
        parse_graph6("")
    with pytest.raises(CodecError):
        parse_graph6("~??")  # long form marker
    with pytest.raises(CodecError):
        parse_graph6("B")  # truncated payload
    with pytest.raises(CodecError):
        parse_graph6("Bwww")  # excess payload
    with pytest.raises(CodecError):
        parse_graph6("A" + chr(30))  # byte below printable range


def test_rejects_nonzero_padding():
    # K_2 payload has five padding bits; flip one of them
    bad = "A" + chr(ord("_") + 1)
    with pytest.raises(CodecError):
        parse_graph6(bad)


def test_emit_refuses_oversize():
    g = from_edge_list(63, [])
    with pytest.raises(CodecError):
        emit_graph6(g)


def test_iter_graph6_lines_numbers_and_filtering():
    lines = ["", ">>graph6<<A_", "Bw", "   ", "Bg"]
    got = iter_graph6_lines(lines)
    assert got == [(2, "A_"), (3, "Bw"), (5, "Bg")]
