"""Brute-force forest/tree counting used as the exact oracle for small graphs.

Everything here enumerates edge subsets directly (union-find with rollback,
lexicographic with pruning) and never touches the algebraic routes, so it can
cross-check them.  Guarded to n <= 10 and m <= 24.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .graph import Graph, GraphError, _bits

__all__ = [
    "SizeGuardError",
    "OracleError",
    "ForestBoundRow",
    "enumerate_spanning_trees",
    "count_separating_two_forests",
    "count_grouped_two_forests",
    "count_trees_with_edge",
    "check_forest_degree_bound",
]

MAX_N = 10
MAX_M = 24


class SizeGuardError(ValueError):
    """Graph too large for explicit enumeration."""


class OracleError(RuntimeError):
    """An exactly-provable statement failed on a concrete graph."""


@dataclass(frozen=True)
class ForestBoundRow:
    """Exact evaluation of the degree-weighted separating-forest bound at (i, j).

    lhs = deg(j) * f_{i,j} and rhs = 2*tau + sum over the second-neighborhood
    correction set Z_j of grouped-forest counts, minus the trees through {i, j}
    when i ~ j.  equality records lhs == rhs; condition records the path
    criterion (every correction vertex on i's side can reach j only through i).
    The two must coincide.
    """

    i: int
    j: int
    adjacent: bool
    lhs: int
    rhs: int
    holds: bool
    equality: bool
    condition: bool


def _guard(g: Graph) -> None:
    if g.n > MAX_N or g.m > MAX_M:
        raise SizeGuardError(
            f"enumeration oracle is limited to n <= {MAX_N}, m <= {MAX_M} "
            f"(got n={g.n}, m={g.m})"
        )


def _enumerate(g: Graph, k: int, want_masks: bool, want_edgesets: bool):
    """All acyclic k-edge subsets.

    Returns (count, component_masks, edge_masks); component_masks holds the
    vertex bitmask of the part containing vertex 0 (meaningful for k = n-2,
    where every acyclic subset has exactly two parts).
    """
    edges = g.edges()
    m = len(edges)
    n = g.n
    parent = list(range(n))
    size = [1] * n
    chosen: list[int] = []
    masks: list[int] = []
    esets: list[int] = []
    count = 0

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def leaf() -> None:
        nonlocal count
        count += 1
        if want_masks:
            r0 = find(0)
            acc = 0
            for v in range(n):
                if find(v) == r0:
                    acc |= 1 << v
            masks.append(acc)
        if want_edgesets:
            acc = 0
            for idx in chosen:
                acc |= 1 << idx
            esets.append(acc)

    def rec(start: int, need: int) -> None:
        if need == 0:
            leaf()
            return
        for idx in range(start, m - need + 1):
            u, v = edges[idx]
            ru, rv = find(u), find(v)
            if ru == rv:
                continue
            if size[ru] < size[rv]:
                ru, rv = rv, ru
            parent[rv] = ru
            size[ru] += size[rv]
            chosen.append(idx)
            rec(idx + 1, need - 1)
            chosen.pop()
            size[ru] -= size[rv]
            parent[rv] = rv

    if 0 <= k <= m:
        rec(0, k)
    return count, masks, esets


@lru_cache(maxsize=32)
def _two_forest_masks(g: Graph) -> np.ndarray:
    _guard(g)
    if g.n < 2:
        return np.zeros(0, dtype=np.int32)
    _, masks, _ = _enumerate(g, g.n - 2, want_masks=True, want_edgesets=False)
    return np.array(masks, dtype=np.int32)


@lru_cache(maxsize=32)
def _tree_edge_masks(g: Graph) -> np.ndarray:
    _guard(g)
    if g.n == 1:
        # the empty edge set is the single spanning tree
        return np.zeros(1, dtype=np.int64)
    _, _, esets = _enumerate(g, g.n - 1, want_masks=False, want_edgesets=True)
    return np.array(esets, dtype=np.int64)


def enumerate_spanning_trees(g: Graph) -> int:
    """Spanning-tree count by explicit enumeration (0 when disconnected)."""
    return int(_tree_edge_masks(g).shape[0])


def count_separating_two_forests(g: Graph, i: int, j: int) -> int:
    """Spanning two-forests whose parts split i from j."""
    _check_vertices(g, i, j)
    masks = _two_forest_masks(g)
    if masks.size == 0:
        return 0
    side_i = (masks >> i) & 1
    side_j = (masks >> j) & 1
    return int(np.count_nonzero(side_i != side_j))


def count_grouped_two_forests(g: Graph, x: int, y: int, z: int) -> int:
    """Spanning two-forests keeping x with y while z sits in the other part."""
    _check_vertices(g, x, y, z)
    masks = _two_forest_masks(g)
    if masks.size == 0:
        return 0
    bx = (masks >> x) & 1
    by = (masks >> y) & 1
    bz = (masks >> z) & 1
    return int(np.count_nonzero((bx == by) & (bz != bx)))


def count_trees_with_edge(g: Graph, i: int, j: int) -> int:
    """Spanning trees that use the edge {i, j}; the edge must exist."""
    _check_vertices(g, i, j)
    if not g.has_edge(i, j):
        raise GraphError(f"({i}, {j}) is not an edge")
    edges = g.edges()
    idx = edges.index((min(i, j), max(i, j)))
    trees = _tree_edge_masks(g)
    if trees.size == 0:
        return 0
    return int(np.count_nonzero((trees >> idx) & 1))


def _check_vertices(g: Graph, *vs: int) -> None:
    for v in vs:
        if not (0 <= v < g.n):
            raise GraphError(f"vertex {v} out of range")
    if len(set(vs)) != len(vs):
        raise GraphError(f"vertices must be distinct, got {vs}")


def _reaches_avoiding(g: Graph, src: int, dst: int, banned: int) -> bool:
    # BFS from src to dst in g with vertex `banned` deleted
    block = 1 << banned
    visited = 1 << src
    frontier = visited
    target = 1 << dst
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.rows[v]
        nxt &= ~visited & ~block
        if nxt & target:
            return True
        visited |= nxt
        frontier = nxt
    return False


def check_forest_degree_bound(g: Graph, i: int) -> list[ForestBoundRow]:
    """Evaluate deg(j) * f_{i,j} against its two-forest upper bound for all j.

    Both sides are exact integers from enumeration.  Raises OracleError if the
    bound ever fails, or if lhs == rhs disagrees with the path criterion that
    characterizes equality.
    """
    _guard(g)
    from .graph import is_connected

    if not is_connected(g):
        raise GraphError("bound check needs a connected graph")
    if not (0 <= i < g.n):
        raise GraphError(f"vertex {i} out of range")
    if g.n < 2:
        return []
    tau = enumerate_spanning_trees(g)
    rows = []
    ni = g.rows[i]
    for j in range(g.n):
        if j == i:
            continue
        nj = g.rows[j]
        f_ij = count_separating_two_forests(g, i, j)
        lhs = g.degree(j) * f_ij
        z_j = [v for v in _bits(nj) if v != i and not ((ni >> v) & 1)]
        rhs = 2 * tau + sum(count_grouped_two_forests(g, j, v, i) for v in z_j)
        adjacent = g.has_edge(i, j)
        if adjacent:
            rhs -= count_trees_with_edge(g, i, j)
        holds = lhs <= rhs
        equality = lhs == rhs
        z_i = [v for v in _bits(ni) if v != j and not ((nj >> v) & 1)]
        condition = all(not _reaches_avoiding(g, z, j, i) for z in z_i)
        if not holds:
            rows_repr = _safe_graph6(g)
            raise OracleError(
                f"forest degree bound failed on {rows_repr} at (i={i}, j={j}): "
                f"{lhs} > {rhs}"
            )
        if equality != condition:
            rows_repr = _safe_graph6(g)
            raise OracleError(
                f"equality characterization mismatch on {rows_repr} at "
                f"(i={i}, j={j}): lhs={lhs} rhs={rhs} condition={condition}"
            )
        rows.append(
            ForestBoundRow(
                i=i,
                j=j,
                adjacent=adjacent,
                lhs=lhs,
                rhs=rhs,
                holds=holds,
                equality=equality,
                condition=condition,
            )
        )
    return rows


def _safe_graph6(g: Graph) -> str:
    try:
        from .graph6 import emit_graph6

        return emit_graph6(g)
    except Exception:
        return repr(g)
