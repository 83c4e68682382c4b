import pytest

from kemeny.engine import spanning_tree_count, two_forest_matrix
from kemeny.families import complete_graph, cycle_graph, path_graph, star_graph
from kemeny.forests import (
    OracleError,
    SizeGuardError,
    check_forest_degree_bound,
    count_grouped_two_forests,
    count_separating_two_forests,
    count_trees_with_edge,
    enumerate_spanning_trees,
)
from kemeny.graph import GraphError, from_edge_list, is_connected

from conftest import load_corpus


def test_tree_counts_match_algebra_exhaustively():
    for n in range(1, 7):
        for g in load_corpus(n):
            assert enumerate_spanning_trees(g) == spanning_tree_count(g)


def test_separating_counts_match_algebra():
    for n in range(2, 7):
        for g in load_corpus(n):
            if not is_connected(g):
                continue
            f = two_forest_matrix(g)
            for i in range(n):
                for j in range(i + 1, n):
                    assert count_separating_two_forests(g, i, j) == f[i][j]


def test_adjacent_pairs_forest_equals_trees_through_edge():
    # for an edge {i, j}: forests separating i from j == trees using the edge
    for g in load_corpus(5):
        if not is_connected(g):
            continue
        for i, j in g.edges():
            assert count_separating_two_forests(g, i, j) == count_trees_with_edge(
                g, i, j
            )


def test_grouped_counts_by_hand_on_path():
    p3 = path_graph(3)
    # two-forests of P_3: drop one edge. {01|2} and {0|12}.
    assert count_separating_two_forests(p3, 0, 2) == 2
    assert count_grouped_two_forests(p3, 0, 1, 2) == 1
    assert count_grouped_two_forests(p3, 1, 2, 0) == 1
    assert count_grouped_two_forests(p3, 0, 2, 1) == 0


def test_grouped_counts_by_hand_on_triangle():
    k3 = complete_graph(3)
    # forests are single edges; x with y and z apart means edge {x, y}
    assert count_grouped_two_forests(k3, 0, 1, 2) == 1
    assert count_separating_two_forests(k3, 0, 1) == 2


def test_trees_with_edge_star():
    s4 = star_graph(4)
    for leaf in range(1, 4):
        assert count_trees_with_edge(s4, 0, leaf) == 1
    with pytest.raises(GraphError):
        count_trees_with_edge(s4, 1, 2)


def test_vertex_validation():
    g = path_graph(3)
    with pytest.raises(GraphError):
        count_separating_two_forests(g, 0, 3)
    with pytest.raises(GraphError):
        count_grouped_two_forests(g, 0, 0, 1)


def test_size_guard():
    with pytest.raises(SizeGuardError):
        enumerate_spanning_trees(complete_graph(11))
    with pytest.raises(SizeGuardError):
        enumerate_spanning_trees(complete_graph(8))  # 28 edges > guard


def test_degree_bound_rows_star():
    rows = check_forest_degree_bound(star_graph(4), 0)
    # from the center every leaf has degree 1, f = 1, and tau = 1
    for row in rows:
        assert row.adjacent
        assert row.lhs == 1
        assert row.holds
        assert row.equality == row.condition


def test_degree_bound_rows_leaf_start():
    rows = check_forest_degree_bound(star_graph(4), 1)
    by_j = {r.j: r for r in rows}
    # center from a leaf: deg 3, f = 1, rhs = 2 - 1 (adjacent) + grouped terms
    assert by_j[0].lhs == 3
    assert by_j[0].holds


def test_degree_bound_equality_on_cycle():
    # C_4 from any vertex: opposite vertex j has Z_j empty on both sides
    rows = check_forest_degree_bound(cycle_graph(4), 0)
    by_j = {r.j: r for r in rows}
    assert by_j[2].lhs == 2 * count_separating_two_forests(cycle_graph(4), 0, 2)
    assert by_j[2].holds


def test_degree_bound_never_raises_on_small_corpus():
    for n in range(2, 7):
        for g in load_corpus(n):
            if not is_connected(g):
                continue
            degs = g.degrees()
            roots = {0, max(range(n), key=lambda v: degs[v])}
            for i in roots:
                rows = check_forest_degree_bound(g, i)
                assert len(rows) == n - 1
                assert all(r.holds for r in rows)
                assert all(r.equality == r.condition for r in rows)


def test_degree_bound_rejects_disconnected():
    with pytest.raises(GraphError):
        check_forest_degree_bound(from_edge_list(3, [(0, 1)]), 0)
