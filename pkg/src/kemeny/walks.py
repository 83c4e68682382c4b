"""Monte-Carlo estimators for hitting times and Kemeny's constant.

These sit on top of kemeny.kernel, so the samples are reproducible from
(seed, trial index) alone and independent of the backend.  Standard errors
use the sample standard deviation; a single trial reports an infinite one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernel
from .graph import Graph, GraphError, is_connected, join

__all__ = [
    "WalkEstimate",
    "JoinClaimReport",
    "flat_adjacency",
    "estimate_mfpt",
    "estimate_kemeny",
    "estimate_join_claim",
]


@dataclass(frozen=True)
class WalkEstimate:
    mean: float
    std_error: float
    trials: int
    seed: int


@dataclass(frozen=True)
class JoinClaimReport:
    """Sampled check that a hitting time into x is at most n plus twice the
    return time of x, on the join of two graphs.

    margin widens the comparison by four combined standard errors, so a
    true inequality practically never reports False by sampling noise.
    """

    n: int
    hit: WalkEstimate
    ret: WalkEstimate
    bound: float
    margin: float
    satisfied: bool


def flat_adjacency(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """CSR-style flattening: (offsets int64[n+1], neighbors int32[2m])."""
    offsets = np.zeros(g.n + 1, dtype=np.int64)
    targets = np.empty(2 * g.m, dtype=np.int32)
    pos = 0
    for v in range(g.n):
        nbrs = list(g.neighbors(v))
        targets[pos : pos + len(nbrs)] = nbrs
        pos += len(nbrs)
        offsets[v + 1] = pos
    return offsets, targets


def _summarize(samples: np.ndarray, scale: float, trials: int, seed: int) -> WalkEstimate:
    mean = float(samples.mean()) * scale
    if trials > 1:
        se = float(samples.std(ddof=1)) / math.sqrt(trials) * scale
    else:
        se = math.inf
    return WalkEstimate(mean=mean, std_error=se, trials=trials, seed=seed)


def _check_walk_args(g: Graph, trials: int) -> None:
    if trials < 1:
        raise ValueError(f"need at least one trial, got {trials}")
    if not is_connected(g):
        raise GraphError("random walks need a connected graph")
    if g.n < 2:
        raise GraphError("a single vertex has no walk to run")


def estimate_mfpt(
    g: Graph, i: int, j: int, trials: int, seed: int, trial_start: int = 0
) -> WalkEstimate:
    """Sampled mean first-passage time from i to j (i == j: return time)."""
    _check_walk_args(g, trials)
    if not (0 <= i < g.n and 0 <= j < g.n):
        raise GraphError(f"vertex pair ({i}, {j}) out of range")
    offsets, targets = flat_adjacency(g)
    samples = kernel.walk_hits(offsets, targets, i, j, trials, seed, trial_start)
    return _summarize(samples, 1.0, trials, seed)


def estimate_kemeny(
    g: Graph, i: int, trials: int, seed: int, trial_start: int = 0
) -> WalkEstimate:
    """Sampled Kemeny's constant: passage times from i to stationary targets.

    Start-vertex independence of the exact quantity makes i a free choice.
    """
    _check_walk_args(g, trials)
    if not (0 <= i < g.n):
        raise GraphError(f"vertex {i} out of range")
    offsets, targets = flat_adjacency(g)
    samples = kernel.kemeny_hits(offsets, targets, i, trials, seed, trial_start)
    scale = (2 * g.m - g.degree(i)) / (2 * g.m)
    return _summarize(samples, scale, trials, seed)


def estimate_join_claim(
    g1: Graph, g2: Graph, x: int, y: int, trials: int, seed: int
) -> JoinClaimReport:
    """Check E_y(time to x) <= n + 2 E_x(return to x) on join(g1, g2).

    x and y index the join (g1's vertices first).  The two estimates draw
    from disjoint trial ranges of the same seed so the report is
    reproducible as a whole.
    """
    g = join(g1, g2)
    if x == y:
        raise GraphError("the claim compares two distinct vertices")
    hit = estimate_mfpt(g, y, x, trials, seed)
    offsets, targets = flat_adjacency(g)
    ret_samples = kernel.walk_hits(
        offsets, targets, x, x, trials, seed, trial_start=trials
    )
    ret = _summarize(ret_samples, 1.0, trials, seed)
    bound = g.n + 2.0 * ret.mean
    margin = 4.0 * math.sqrt(hit.std_error**2 + 4.0 * ret.std_error**2)
    return JoinClaimReport(
        n=g.n,
        hit=hit,
        ret=ret,
        bound=bound,
        margin=margin,
        satisfied=bool(hit.mean <= bound + margin),
    )
