"""Named graph generators with self-checking structure.

Every family is addressable by a (name, integer params) pair so the CLI can
build them, and each generator asserts the structural facts later tests and
closed forms rely on (regularity, order, bridge placement).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .graph import (
    ChainSpec,
    Graph,
    GraphError,
    chain_of_graphs,
    from_edge_list,
    is_connected,
    join,
)

__all__ = [
    "FamilySpec",
    "FAMILIES",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "empty_graph",
    "star_graph",
    "complete_bipartite",
    "complete_split",
    "two_cliques_edge",
    "barbell_chain",
    "necklace",
    "petersen",
    "hamming_graph",
    "regular_matching_chain",
]


def path_graph(n: int) -> Graph:
    """Path on n vertices, 0-1-...-(n-1)."""
    if n < 1:
        raise GraphError("path needs n >= 1")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("empty graph needs n >= 1")
    return from_edge_list(n, [])


def star_graph(n: int) -> Graph:
    """Star on n vertices: center 0 adjacent to all n-1 leaves."""
    if n < 2:
        raise GraphError("star needs n >= 2")
    return from_edge_list(n, [(0, i) for i in range(1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError("both sides need at least one vertex")
    return join(empty_graph(a), empty_graph(b))


def complete_split(a: int, b: int) -> Graph:
    """Join of a clique on a vertices with b isolated vertices."""
    if a < 1 or b < 1:
        raise GraphError("both sides need at least one vertex")
    return join(complete_graph(a), empty_graph(b))


def two_cliques_edge(a: int, b: int) -> Graph:
    """Cliques K_a and K_b joined by the single bridge edge {0, a}."""
    if a < 1 or b < 1:
        raise GraphError("both cliques need at least one vertex")
    edges = [(i, j) for i in range(a) for j in range(i + 1, a)]
    edges += [(a + i, a + j) for i in range(b) for j in range(i + 1, b)]
    edges.append((0, a))
    g = from_edge_list(a + b, edges)
    assert g.m == a * (a - 1) // 2 + b * (b - 1) // 2 + 1
    return g


def barbell_chain(d: int) -> Graph:
    """Two copies of K_d joined by a path through d-2 fresh vertices.

    Order 3d - 2; every internal path vertex is its own block of the chain.
    """
    if d < 2:
        raise GraphError("barbell needs d >= 2")
    blocks = [complete_graph(d)] + [complete_graph(1)] * (d - 2) + [complete_graph(d)]
    tree = path_graph(len(blocks))
    attachments = {(i, i + 1): (0, 0) for i in range(len(blocks) - 1)}
    g = chain_of_graphs(ChainSpec(tuple(blocks), tree, attachments))
    assert g.n == 3 * d - 2
    return g


def _necklace_end() -> Graph:
    # K_4 minus an edge, with the two degree-2 vertices joined through a
    # fifth vertex; that fifth vertex (index 4) takes the bridge
    return from_edge_list(
        5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)]
    )


def _necklace_interior() -> Graph:
    # K_4 minus the edge {2, 3}; vertices 2 and 3 take the two bridges
    return from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def necklace(d: int) -> Graph:
    """Cubic chain of d gadget blocks in a row, order 4d + 2.

    Two 5-vertex end blocks sandwich d - 2 interior 4-vertex blocks; each
    bridge lands on a degree-2 vertex, so the result is 3-regular.
    """
    if d < 2:
        raise GraphError("necklace needs d >= 2")
    blocks = [_necklace_end()] + [_necklace_interior()] * (d - 2) + [_necklace_end()]
    attachments = {}
    for i in range(d - 1):
        left = 4 if i == 0 else 3
        right = 4 if i + 1 == d - 1 else 2
        attachments[(i, i + 1)] = (left, right)
    g = chain_of_graphs(ChainSpec(tuple(blocks), path_graph(d), attachments))
    assert g.n == 4 * d + 2
    assert set(g.degrees()) == {3}
    return g


def petersen() -> Graph:
    """Outer 5-cycle, inner 5-cycle with step 2, matched by spokes."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    g = from_edge_list(10, edges)
    assert set(g.degrees()) == {3}
    return g


def hamming_graph(d: int, q: int) -> Graph:
    """Words of length d over q symbols, adjacent when they differ in one slot."""
    if d < 1 or q < 2:
        raise GraphError("need d >= 1 and q >= 2")
    n = q**d
    if n > 4096:
        raise GraphError(f"refusing to build a Hamming graph on {n} vertices")
    words = list(product(range(q), repeat=d))
    index = {w: i for i, w in enumerate(words)}
    edges = []
    for w in words:
        for pos in range(d):
            for sym in range(w[pos] + 1, q):
                edges.append((index[w], index[w[:pos] + (sym,) + w[pos + 1 :]]))
    g = from_edge_list(n, edges)
    assert set(g.degrees()) == {d * (q - 1)}
    return g


def regular_matching_chain(h: Graph, block: Graph) -> Graph:
    """One copy of `block` per vertex of `h`, adjacent copies joined by the
    identity perfect matching.  Both inputs must be regular; the result is
    (deg(block) + deg(h))-regular and the copies form an equitable partition.
    """
    bd = set(block.degrees())
    hd = set(h.degrees())
    if len(bd) != 1 or len(hd) != 1:
        raise GraphError("both the block and the pattern must be regular")
    if not is_connected(block) or not is_connected(h):
        raise GraphError("both the block and the pattern must be connected")
    nb = block.n
    edges = []
    for c in range(h.n):
        base = c * nb
        edges += [(base + u, base + v) for u, v in block.edges()]
    for cu, cv in h.edges():
        edges += [(cu * nb + i, cv * nb + i) for i in range(nb)]
    g = from_edge_list(nb * h.n, edges)
    assert set(g.degrees()) == {bd.pop() + hd.pop()}
    for v in range(g.n):
        mine = v // nb
        for c in range(h.n):
            # count of v's neighbors inside copy c
            span = ((1 << nb) - 1) << (c * nb)
            cnt = (g.rows[v] & span).bit_count()
            want = block.degree(v % nb) if c == mine else int(h.has_edge(mine, c))
            assert cnt == want, "copies do not form an equitable partition"
    return g


@dataclass(frozen=True)
class FamilySpec:
    """A named family plus its integer parameters, e.g. ("path", (7,))."""

    family: str
    params: tuple[int, ...]

    def generate(self) -> Graph:
        try:
            builder, arity = FAMILIES[self.family]
        except KeyError:
            raise GraphError(f"unknown family {self.family!r}") from None
        if len(self.params) != arity:
            raise GraphError(
                f"family {self.family!r} takes {arity} parameter(s), "
                f"got {len(self.params)}"
            )
        return builder(*self.params)


def _join_family(a: int, b: int) -> Graph:
    return complete_split(a, b)


def _matching_chain_family(n1: int, n2: int) -> Graph:
    return regular_matching_chain(cycle_graph(n2), complete_graph(n1))


FAMILIES = {
    "path": (path_graph, 1),
    "cycle": (cycle_graph, 1),
    "complete": (complete_graph, 1),
    "empty": (empty_graph, 1),
    "star": (star_graph, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "join": (_join_family, 2),
    "two_cliques_edge": (two_cliques_edge, 2),
    "barbell_chain": (barbell_chain, 1),
    "necklace": (necklace, 1),
    "petersen": (lambda: petersen(), 0),
    "hamming": (hamming_graph, 2),
    "regular_matching_chain": (_matching_chain_family, 2),
}
