#!/usr/bin/env python3
"""Generate exhaustive small-graph corpora, one graph per isomorphism class.

Writes tests/data/graphs{n}.g6 for n = 1..7 in a deterministic order
(ascending canonical code).  Counts are asserted against the known number
of graphs per order: 1, 2, 4, 11, 34, 156, 1044.

Orders 8 and 9 are intentionally not bundled; generate them with nauty's
geng (`geng 8 > graphs8.g6`) if the full scatter experiment is wanted.
"""

from __future__ import annotations

import itertools
import pathlib
import sys

import numpy as np

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from kemeny.graph import from_edge_list
from kemeny.graph6 import emit_graph6

EXPECTED = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
MAX_N = 7


def canonical_code(adj: np.ndarray, perms: np.ndarray, iu, weights: np.ndarray) -> int:
    """Minimum upper-triangle bit encoding over all vertex relabelings."""
    mats = adj[perms[:, :, None], perms[:, None, :]]
    bits = mats[:, iu[0], iu[1]].astype(np.int64)
    return int((bits @ weights).min())


def decode(n: int, code: int, iu, nbits: int) -> np.ndarray:
    adj = np.zeros((n, n), dtype=bool)
    for k in range(nbits):
        if code >> (nbits - 1 - k) & 1:
            i, j = int(iu[0][k]), int(iu[1][k])
            adj[i, j] = adj[j, i] = True
    return adj


def grow(parents: list[np.ndarray], n: int) -> list[np.ndarray]:
    """All order-n classes from order-(n-1) ones by attaching a new vertex."""
    perms = np.array(list(itertools.permutations(range(n))))
    iu = np.triu_indices(n, 1)
    nbits = len(iu[0])
    weights = (1 << np.arange(nbits - 1, -1, -1)).astype(np.int64)
    codes = set()
    for parent in parents:
        base = np.zeros((n, n), dtype=bool)
        base[: n - 1, : n - 1] = parent
        for mask in range(1 << (n - 1)):
            adj = base.copy()
            for v in range(n - 1):
                if mask >> v & 1:
                    adj[v, n - 1] = adj[n - 1, v] = True
            codes.add(canonical_code(adj, perms, iu, weights))
    return [decode(n, code, iu, nbits) for code in sorted(codes)]


def main() -> int:
    out_dir = pathlib.Path(__file__).resolve().parents[1] / "tests" / "data"
    out_dir.mkdir(parents=True, exist_ok=True)
    layers = [np.zeros((1, 1), dtype=bool)]
    for n in range(1, MAX_N + 1):
        if n > 1:
            layers = grow(layers, n)
        assert len(layers) == EXPECTED[n], (n, len(layers))
        path = out_dir / f"graphs{n}.g6"
        with open(path, "w", encoding="ascii") as fh:
            for adj in layers:
                us, vs = np.nonzero(np.triu(adj, 1))
                g = from_edge_list(n, list(zip(us.tolist(), vs.tolist())))
                fh.write(emit_graph6(g) + "\n")
        print(f"wrote {path} ({EXPECTED[n]} graphs)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
