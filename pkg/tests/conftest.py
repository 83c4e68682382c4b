"""Shared helpers: corpus loading, random graphs, brute-force isomorphism."""

from __future__ import annotations

import itertools
from pathlib import Path

from kemeny.graph import Graph, from_edge_list, is_connected
from kemeny.graph6 import iter_graph6_lines, parse_graph6

DATA = Path(__file__).parent / "data"


def corpus_path(n: int) -> Path:
    return DATA / f"graphs{n}.g6"


def load_corpus(n: int) -> list[Graph]:
    with open(corpus_path(n), encoding="ascii") as fh:
        return [parse_graph6(payload) for _, payload in iter_graph6_lines(fh)]


def load_corpus_lines(n: int) -> list[str]:
    with open(corpus_path(n), encoding="ascii") as fh:
        return fh.read().splitlines()


def random_graph(rng, n: int, p: float) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return from_edge_list(n, edges)


def random_connected_graph(rng, n: int, p: float) -> Graph:
    # rejection keeps the edge distribution honest; p should not be tiny
    while True:
        g = random_graph(rng, n, p)
        if is_connected(g):
            return g


def random_connected_with_edges(rng, n: int, m: int) -> Graph:
    """Connected graph with exactly m edges: random tree plus extra edges."""
    assert m >= n - 1
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for idx in range(1, n):
        u = order[rng.randrange(idx)]
        v = order[idx]
        edges.add((min(u, v), max(u, v)))
    pool = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if (i, j) not in edges
    ]
    rng.shuffle(pool)
    edges.update(pool[: m - (n - 1)])
    return from_edge_list(n, sorted(edges))


def isomorphic(g: Graph, h: Graph) -> bool:
    """Brute force over all vertex relabelings; fine for n <= 8."""
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    gedges = list(g.edges())
    for perm in itertools.permutations(range(g.n)):
        if all(h.has_edge(perm[u], perm[v]) for u, v in gedges):
            return True
    return False
