"""Immutable simple graphs with bit-row adjacency, plus basic constructions.

Vertices are 0..n-1.  Row v is a Python int whose bit w is set iff {v, w}
is an edge, so neighborhood operations are single integer ops and graphs of
any order fit without fixed-width limits.  Instances are immutable, hashable
and safe to share between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "Graph",
    "GraphError",
    "GraphStats",
    "BridgeSplit",
    "ChainSpec",
    "from_edge_list",
    "complement",
    "join",
    "graph_stats",
    "is_connected",
    "bfs_distances",
    "diameter",
    "bridges",
    "chain_of_graphs",
    "parse_edge_list",
    "format_edge_list",
]


class GraphError(ValueError):
    """Malformed graph data or an operation's structural precondition failed."""


def _bits(x: int) -> Iterator[int]:
    # indices of set bits, ascending
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


class Graph:
    """Undirected simple graph; `rows[v]` is the neighbor bitmask of v."""

    __slots__ = ("n", "rows", "m")

    def __init__(self, n: int, rows: Sequence[int]):
        rows = tuple(int(r) for r in rows)
        if n < 1:
            raise GraphError("graph needs at least one vertex")
        if len(rows) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, r in enumerate(rows):
            if r < 0 or r & ~full:
                raise GraphError(f"row {v} has bits outside 0..{n - 1}")
            if (r >> v) & 1:
                raise GraphError(f"self-loop at vertex {v}")
        for v in range(n):
            for w in range(v + 1, n):
                if ((rows[v] >> w) & 1) != ((rows[w] >> v) & 1):
                    raise GraphError(f"asymmetric adjacency at ({v}, {w})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "m", sum(r.bit_count() for r in rows) // 2)

    @classmethod
    def _raw(cls, n: int, rows: tuple[int, ...]) -> "Graph":
        # fast path for constructors that build rows symmetric by construction
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        object.__setattr__(g, "m", sum(r.bit_count() for r in rows) // 2)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> Iterator[int]:
        return _bits(self.rows[v])

    def edges(self) -> list[tuple[int, int]]:
        """Edge list with u < v, sorted lexicographically."""
        out = []
        for u in range(self.n):
            r = self.rows[u] >> (u + 1)
            for w in _bits(r):
                out.append((u, u + 1 + w))
        return out


@dataclass(frozen=True)
class GraphStats:
    connected: bool
    degrees: tuple[int, ...]
    max_deg: int
    min_deg: int
    diam: float  # math.inf when disconnected, 0 for a single vertex


@dataclass(frozen=True)
class BridgeSplit:
    """A cut edge {x, y} with edge counts of the two sides after removal.

    w_x counts edges in the component containing x once the bridge is gone;
    wbar_x = m - w_x counts everything else (the bridge plus the y side).
    """

    x: int
    y: int
    w_x: int
    w_y: int
    wbar_x: int
    wbar_y: int


@dataclass(frozen=True)
class ChainSpec:
    """Blocks glued along the edges of a tree by single bridge edges.

    attachments maps a tree edge (i, j) with i < j to the pair of local
    vertex indices (one in block i, one in block j) that the bridge joins.
    """

    blocks: tuple[Graph, ...]
    tree: Graph
    attachments: Mapping[tuple[int, int], tuple[int, int]]


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on n vertices from an iterable of (u, v) pairs.

    Duplicate edges collapse; self-loops and out-of-range endpoints raise.
    """
    if n < 1:
        raise GraphError("graph needs at least one vertex")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._raw(n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    rows = tuple((full & ~r) & ~(1 << v) for v, r in enumerate(g.rows))
    return Graph._raw(g.n, rows)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union of g1 and g2 plus every edge between the two sides."""
    n1, n2 = g1.n, g2.n
    right_all = ((1 << n2) - 1) << n1
    left_all = (1 << n1) - 1
    rows = [r | right_all for r in g1.rows]
    rows += [(r << n1) | left_all for r in g2.rows]
    return Graph._raw(n1 + n2, tuple(rows))


def bfs_distances(g: Graph, src: int) -> list[float]:
    """Hop distances from src; unreachable vertices get math.inf."""
    dist: list[float] = [math.inf] * g.n
    dist[src] = 0
    visited = 1 << src
    frontier = visited
    d = 0
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.rows[v]
        nxt &= ~visited
        d += 1
        for v in _bits(nxt):
            dist[v] = d
        visited |= nxt
        frontier = nxt
    return dist


def is_connected(g: Graph) -> bool:
    visited = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.rows[v]
        nxt &= ~visited
        visited |= nxt
        frontier = nxt
    return visited == (1 << g.n) - 1


def diameter(g: Graph) -> float:
    """Largest eccentricity; math.inf when disconnected, 0 for n=1."""
    best = 0.0
    for v in range(g.n):
        ecc = max(bfs_distances(g, v))
        if math.isinf(ecc):
            return math.inf
        best = max(best, ecc)
    return best


def graph_stats(g: Graph) -> GraphStats:
    degs = g.degrees()
    return GraphStats(
        connected=is_connected(g),
        degrees=degs,
        max_deg=max(degs),
        min_deg=min(degs),
        diam=diameter(g),
    )


def _component_mask(rows: Sequence[int], src: int) -> int:
    visited = 1 << src
    frontier = visited
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= rows[v]
        nxt &= ~visited
        visited |= nxt
        frontier = nxt
    return visited


def bridges(g: Graph) -> list[BridgeSplit]:
    """All cut edges of a connected graph with their side edge-counts.

    Sorted by (x, y) with x < y.  Raises GraphError on disconnected input.
    """
    if not is_connected(g):
        raise GraphError("bridge decomposition needs a connected graph")
    n, m = g.n, g.m
    # iterative DFS lowpoint computation
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    out: list[tuple[int, int]] = []
    timer = 0
    stack: list[tuple[int, Iterator[int]]] = [(0, _bits(g.rows[0]))]
    disc[0] = low[0] = timer
    timer += 1
    while stack:
        v, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                parent[w] = v
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, _bits(g.rows[w])))
                advanced = True
                break
            if w != parent[v]:
                low[v] = min(low[v], disc[w])
        if not advanced:
            stack.pop()
            if parent[v] != -1:
                p = parent[v]
                low[p] = min(low[p], low[v])
                if low[v] > disc[p]:
                    out.append((min(p, v), max(p, v)))
    splits = []
    for x, y in sorted(out):
        cut = list(g.rows)
        cut[x] &= ~(1 << y)
        cut[y] &= ~(1 << x)
        side_x = _component_mask(cut, x)
        w_x = sum((cut[v] & side_x).bit_count() for v in _bits(side_x)) // 2
        w_y = m - 1 - w_x
        splits.append(
            BridgeSplit(x=x, y=y, w_x=w_x, w_y=w_y, wbar_x=m - w_x, wbar_y=m - w_y)
        )
    return splits


def chain_of_graphs(spec: ChainSpec) -> Graph:
    """Glue connected blocks along a tree with one bridge edge per tree edge."""
    blocks = spec.blocks
    tree = spec.tree
    d = len(blocks)
    if tree.n != d:
        raise GraphError(f"tree has {tree.n} vertices but there are {d} blocks")
    if d > 1 and (tree.m != d - 1 or not is_connected(tree)):
        raise GraphError("the gluing pattern must be a tree")
    for i, b in enumerate(blocks):
        if not is_connected(b):
            raise GraphError(f"block {i} is disconnected")
    offsets = [0] * d
    for i in range(1, d):
        offsets[i] = offsets[i - 1] + blocks[i - 1].n
    n = offsets[-1] + blocks[-1].n
    edges: list[tuple[int, int]] = []
    for i, b in enumerate(blocks):
        edges += [(offsets[i] + u, offsets[i] + v) for u, v in b.edges()]
    seen = set()
    for i, j in tree.edges():
        key = (i, j)
        if key not in spec.attachments:
            raise GraphError(f"no attachment given for tree edge {key}")
        vi, vj = spec.attachments[key]
        if not (0 <= vi < blocks[i].n and 0 <= vj < blocks[j].n):
            raise GraphError(f"attachment {key} -> ({vi}, {vj}) out of range")
        edges.append((offsets[i] + vi, offsets[j] + vj))
        seen.add(key)
    extra = set(spec.attachments) - seen
    if extra:
        raise GraphError(f"attachments for non-tree edges: {sorted(extra)}")
    return from_edge_list(n, edges)


def parse_edge_list(text: str) -> Graph:
    """Parse 'n m' header followed by m 'u v' lines (whitespace separated)."""
    toks = text.split()
    if len(toks) < 2:
        raise GraphError("edge list needs an 'n m' header")
    try:
        vals = [int(t) for t in toks]
    except ValueError as exc:
        raise GraphError(f"non-integer token in edge list: {exc}") from None
    n, m = vals[0], vals[1]
    if len(vals) != 2 + 2 * m:
        raise GraphError(f"expected {m} edges, found {(len(vals) - 2) // 2}")
    pairs = list(zip(vals[2::2], vals[3::2]))
    return from_edge_list(n, pairs)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
