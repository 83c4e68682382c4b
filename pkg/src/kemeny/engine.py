"""Kemeny's constant by three independent routes, plus the quantities they share.

For a connected graph G with m edges the random walk moves to a uniform
neighbor each step.  The three routes computed here are

* spectral:    K = sum 1/(1 - lambda_i) over the non-top eigenvalues of
               D^{-1/2} A D^{-1/2},
* resistance:  K = d^T R d / 4m with R the effective-resistance matrix,
* hitting:     K = sum_j pi_j m_{i,j}, which is independent of the start i.

Disconnected graphs get math.inf.  All routes agree to 1e-9 relative and
compute_report enforces that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .graph import Graph, GraphError, complement, graph_stats, is_connected

__all__ = [
    "ComputationError",
    "MfptMatrix",
    "KemenyReport",
    "adjacency",
    "laplacian_int",
    "transition_and_stationary",
    "kemeny_eig",
    "resistance_matrix",
    "kemeny_resistance",
    "mfpt_matrix",
    "kemeny_mfpt",
    "spanning_tree_count",
    "two_forest_matrix",
    "kirchhoff_indices",
    "wiener_and_tree_kemeny",
    "compute_report",
]

_GAP_TOL = 1e-9
_AGREE_TOL = 1e-9
_FOREST_INT_TOL = 1e-6


class ComputationError(RuntimeError):
    """A numeric invariant failed (route disagreement, integrality, ...)."""


@dataclass(frozen=True)
class MfptMatrix:
    """off[i, j] = expected steps from i to first arrival at j (0 on diagonal);
    ret[j] = expected first-return time of j, which equals 2m / deg(j)."""

    off: np.ndarray
    ret: np.ndarray


@dataclass(frozen=True)
class KemenyReport:
    n: int
    m: int
    connected: bool
    complement_connected: bool
    max_deg: int
    min_deg: int
    diam: float
    k_eig: float
    k_resistance: float
    k_mfpt: float
    spanning_trees: int


def adjacency(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    return a


def laplacian_int(g: Graph) -> list[list[int]]:
    n = g.n
    lap = [[0] * n for _ in range(n)]
    for v in range(n):
        lap[v][v] = g.degree(v)
    for u, v in g.edges():
        lap[u][v] = lap[v][u] = -1
    return lap


def transition_and_stationary(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """Row-stochastic walk matrix P = D^{-1}A and its stationary law d/2m."""
    degs = np.array(g.degrees(), dtype=float)
    if np.any(degs == 0):
        raise GraphError("walk undefined: graph has an isolated vertex")
    p = adjacency(g) / degs[:, None]
    pi = degs / (2.0 * g.m)
    return p, pi


def _normalized_adjacency(g: Graph) -> np.ndarray:
    degs = np.array(g.degrees(), dtype=float)
    isq = 1.0 / np.sqrt(degs)
    return adjacency(g) * isq[:, None] * isq[None, :]


def kemeny_eig(g: Graph) -> float:
    """Spectral route; math.inf for disconnected input."""
    if g.n == 1:
        return 0.0
    if not is_connected(g):
        return math.inf
    vals = linalg.eigh_symmetric(_normalized_adjacency(g)).values
    if abs(vals[-1] - 1.0) > 1e-8:
        raise ComputationError(f"top walk eigenvalue is {vals[-1]!r}, expected 1")
    if vals[-2] >= 1.0 - _GAP_TOL:
        return math.inf
    return float(np.sum(1.0 / (1.0 - vals[:-1])))


def resistance_matrix(g: Graph) -> np.ndarray:
    """Effective resistances r[i, j]; requires a connected graph."""
    if not is_connected(g):
        raise GraphError("effective resistance needs a connected graph")
    if g.n == 1:
        return np.zeros((1, 1))
    lp = linalg.pinv_laplacian(np.array(laplacian_int(g), dtype=float))
    d = np.diag(lp)
    r = d[:, None] + d[None, :] - 2.0 * lp
    np.fill_diagonal(r, 0.0)
    return r


def kemeny_resistance(g: Graph) -> float:
    """Resistance route d^T R d / 4m; math.inf for disconnected input."""
    if g.n == 1:
        return 0.0
    if not is_connected(g):
        return math.inf
    degs = np.array(g.degrees(), dtype=float)
    r = resistance_matrix(g)
    return float(degs @ r @ degs) / (4.0 * g.m)


def mfpt_matrix(g: Graph) -> MfptMatrix:
    """Mean first-passage times via one linear solve per target vertex."""
    if not is_connected(g):
        raise GraphError("first-passage times need a connected graph")
    if g.n == 1:
        raise GraphError("first-passage times need at least one edge")
    n = g.n
    p, _ = transition_and_stationary(g)
    off = np.zeros((n, n))
    ones = np.ones(n - 1)
    idx = np.arange(n)
    for j in range(n):
        keep = idx != j
        sub = np.eye(n - 1) - p[np.ix_(keep, keep)]
        off[keep, j] = linalg.solve(sub, ones)
    degs = np.array(g.degrees(), dtype=float)
    return MfptMatrix(off=off, ret=2.0 * g.m / degs)


def kemeny_mfpt(g: Graph, i: int = 0) -> float:
    """Hitting-time route sum_j pi_j m_{i,j}; the start i must not matter."""
    if g.n == 1:
        return 0.0
    if not (0 <= i < g.n):
        raise GraphError(f"start vertex {i} out of range")
    if not is_connected(g):
        return math.inf
    mat = mfpt_matrix(g)
    degs = np.array(g.degrees(), dtype=float)
    pi = degs / (2.0 * g.m)
    return float(pi @ mat.off[i])


def spanning_tree_count(g: Graph) -> int:
    """Exact spanning-tree count: any cofactor of the integer Laplacian."""
    if g.n == 1:
        return 1
    lap = laplacian_int(g)
    reduced = [row[1:] for row in lap[1:]]
    return linalg.det_integer(reduced)


def two_forest_matrix(g: Graph) -> list[list[int]]:
    """f[i][j] = number of spanning two-forests separating i from j.

    Computed as round(tau * r[i, j]); the product must sit within 1e-6
    relative of an integer or ComputationError is raised.
    """
    tau = spanning_tree_count(g)
    if tau == 0:
        raise GraphError("two-forest counts need a connected graph")
    r = resistance_matrix(g)
    n = g.n
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            x = tau * r[i, j]
            f = int(round(x))
            if abs(x - f) > _FOREST_INT_TOL * max(1.0, abs(x)):
                raise ComputationError(
                    f"tau * r[{i},{j}] = {x!r} is not near an integer"
                )
            out[i][j] = out[j][i] = f
    return out


def kirchhoff_indices(g: Graph) -> tuple[float, float]:
    """(Kf, Kf*): plain and degree-weighted sums of pairwise resistances."""
    degs = np.array(g.degrees(), dtype=float)
    r = resistance_matrix(g)
    kf = float(np.sum(r)) / 2.0
    kf_star = float(degs @ r @ degs) / 2.0
    return kf, kf_star


def wiener_and_tree_kemeny(t: Graph) -> tuple[int, float]:
    """For a tree: (Wiener index W, K = 2W/(n-1) - n + 1/2)."""
    if not is_connected(t) or t.m != t.n - 1:
        raise GraphError("input is not a tree")
    from .graph import bfs_distances

    w = 0
    for v in range(t.n):
        w += int(sum(bfs_distances(t, v)))
    w //= 2
    if t.n == 1:
        return 0, 0.0
    return w, 2.0 * w / (t.n - 1) - t.n + 0.5


def compute_report(g: Graph, tolerance: float = _AGREE_TOL) -> KemenyReport:
    """All three routes plus structural stats; routes must agree to tolerance."""
    stats = graph_stats(g)
    comp_connected = is_connected(complement(g))
    if g.n == 1:
        k1 = k2 = k3 = 0.0
    elif not stats.connected:
        k1 = k2 = k3 = math.inf
    else:
        k1 = kemeny_eig(g)
        k2 = kemeny_resistance(g)
        k3 = kemeny_mfpt(g, 0)
        ref = max(abs(k1), 1.0)
        if abs(k1 - k2) > tolerance * ref or abs(k1 - k3) > tolerance * ref:
            raise ComputationError(
                f"route disagreement: eig={k1!r} resistance={k2!r} mfpt={k3!r}"
            )
    return KemenyReport(
        n=g.n,
        m=g.m,
        connected=stats.connected,
        complement_connected=comp_connected,
        max_deg=stats.max_deg,
        min_deg=stats.min_deg,
        diam=stats.diam,
        k_eig=k1,
        k_resistance=k2,
        k_mfpt=k3,
        spanning_trees=spanning_tree_count(g),
    )
