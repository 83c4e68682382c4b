import math

import pytest

from kemeny.graph import (
    ChainSpec,
    Graph,
    GraphError,
    bfs_distances,
    bridges,
    chain_of_graphs,
    complement,
    diameter,
    format_edge_list,
    from_edge_list,
    graph_stats,
    is_connected,
    join,
    parse_edge_list,
)

P4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
K4 = from_edge_list(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])


def test_basic_construction():
    g = from_edge_list(3, [(0, 1), (1, 2)])
    assert g.n == 3
    assert g.m == 2
    assert g.degrees() == (1, 2, 1)
    assert g.has_edge(0, 1) and not g.has_edge(0, 2)
    assert sorted(g.neighbors(1)) == [0, 2]
    assert list(g.edges()) == [(0, 1), (1, 2)]


def test_duplicate_edges_collapse():
    g = from_edge_list(2, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1


def test_invalid_edges_rejected():
    with pytest.raises(GraphError):
        from_edge_list(3, [(0, 3)])
    with pytest.raises(GraphError):
        from_edge_list(3, [(1, 1)])
    with pytest.raises(GraphError):
        from_edge_list(0, [])


def test_constructor_validates_symmetry():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0b00))  # 0->1 present but not 1->0
    with pytest.raises(GraphError):
        Graph(2, (0b01, 0b10))  # self loops
    with pytest.raises(GraphError):
        Graph(2, (0b100, 0b000))  # bit out of range


def test_graph_is_immutable_and_hashable():
    g = from_edge_list(2, [(0, 1)])
    with pytest.raises(AttributeError):
        g.n = 5
    h = from_edge_list(2, [(0, 1)])
    assert g == h
    assert hash(g) == hash(h)
    assert g != from_edge_list(2, [])


def test_complement_involution():
    gc = complement(P4)
    assert gc.m == 6 - P4.m
    assert complement(gc) == P4
    # complement of complete is empty
    assert complement(K4).m == 0


def test_join_structure():
    a = from_edge_list(2, [(0, 1)])
    b = from_edge_list(3, [])
    g = join(a, b)
    assert g.n == 5
    assert g.m == 1 + 2 * 3
    # every cross pair is an edge
    for u in range(2):
        for v in range(2, 5):
            assert g.has_edge(u, v)
    assert not g.has_edge(2, 3)


def test_bfs_and_diameter():
    assert bfs_distances(P4, 0) == [0, 1, 2, 3]
    assert diameter(P4) == 3
    assert diameter(K4) == 1
    disconnected = from_edge_list(3, [(0, 1)])
    assert not is_connected(disconnected)
    assert math.isinf(diameter(disconnected))
    assert math.isinf(bfs_distances(disconnected, 0)[2])


def test_single_vertex():
    g = from_edge_list(1, [])
    assert is_connected(g)
    assert diameter(g) == 0
    stats = graph_stats(g)
    assert stats.connected and stats.max_deg == 0


def test_bridges_on_path():
    splits = bridges(P4)
    assert [(s.x, s.y) for s in splits] == [(0, 1), (1, 2), (2, 3)]
    mid = splits[1]
    assert mid.w_x == 1 and mid.w_y == 1
    assert mid.wbar_x == 2 and mid.wbar_y == 2


def test_bridges_none_in_cycle():
    c4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert bridges(c4) == []


def test_bridges_side_edge_counts():
    # triangle with a pendant: only (0, 3) is a bridge
    g = from_edge_list(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
    splits = bridges(g)
    assert len(splits) == 1
    s = splits[0]
    assert {s.x, s.y} == {0, 3}
    assert s.w_x + s.w_y == g.m - 1


def test_chain_of_graphs_two_triangles():
    tri = from_edge_list(3, [(0, 1), (1, 2), (2, 0)])
    spec = ChainSpec(
        blocks=(tri, tri),
        tree=from_edge_list(2, [(0, 1)]),
        attachments={(0, 1): (0, 0)},
    )
    g = chain_of_graphs(spec)
    assert g.n == 6
    assert g.m == 7
    assert g.has_edge(0, 3)
    assert len(bridges(g)) == 1


def test_chain_of_graphs_validates():
    tri = from_edge_list(3, [(0, 1), (1, 2), (2, 0)])
    two = from_edge_list(2, [])
    with pytest.raises(GraphError):
        chain_of_graphs(ChainSpec((tri, tri), two, {(0, 1): (0, 0)}))
    with pytest.raises(GraphError):
        chain_of_graphs(
            ChainSpec((tri,), from_edge_list(1, []), {(0, 1): (0, 0)})
        )
    bad_vertex = {(0, 1): (0, 5)}
    with pytest.raises(GraphError):
        chain_of_graphs(
            ChainSpec((tri, tri), from_edge_list(2, [(0, 1)]), bad_vertex)
        )


def test_edge_list_roundtrip():
    text = format_edge_list(P4)
    assert text.splitlines()[0] == "4 3"
    assert parse_edge_list(text) == P4


def test_parse_edge_list_errors():
    with pytest.raises(GraphError):
        parse_edge_list("4 2\n0 1\n")  # promised 2 edges, gave 1
    with pytest.raises(GraphError):
        parse_edge_list("4 one\n")
