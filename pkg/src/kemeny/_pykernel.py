"""Pure-Python compute kernels, the fallback behind kemeny.kernel.

The compiled extension mirrors everything here: same scan columns, same
SplitMix64 stream, same truncation rules, so the two backends agree bit
for bit on walk samples and to rounding error on spectra.
"""

from __future__ import annotations

import math

import numpy as np

backend_name = "python"

_GOLDEN = 0x9E3779B97F4A7C15
_MASK = (1 << 64) - 1
_INV_2_53 = 1.0 / 9007199254740992.0


def _mix64(z: int) -> int:
    z ^= z >> 30
    z = (z * 0xBF58476D1CE4E5B9) & _MASK
    z ^= z >> 27
    z = (z * 0x94D049BB133111EB) & _MASK
    z ^= z >> 31
    return z


def _eccentricity(rows: list[int], src: int) -> tuple[int, int]:
    # returns (eccentricity, visited mask); unreachable vertices stay unset
    visited = 1 << src
    frontier = visited
    ecc = 0
    while True:
        nxt = 0
        f = frontier
        while f:
            v = (f & -f).bit_length() - 1
            f &= f - 1
            nxt |= rows[v]
        nxt &= ~visited
        if not nxt:
            return ecc, visited
        visited |= nxt
        frontier = nxt
        ecc += 1


def _diameter(n: int, rows: list[int]) -> float:
    if n == 1:
        return 0.0
    diam, visited = _eccentricity(rows, 0)
    if visited != (1 << n) - 1:
        return math.inf
    for v in range(1, n):
        ecc, _ = _eccentricity(rows, v)
        if ecc > diam:
            diam = ecc
    return float(diam)


def _kemeny(n: int, rows: list[int], degs: list[int]) -> float:
    # callers guarantee connectivity, hence every degree is positive
    if n == 1:
        return 0.0
    inv = [1.0 / math.sqrt(d) for d in degs]
    a = np.zeros((n, n))
    for u in range(n):
        r = rows[u]
        while r:
            v = (r & -r).bit_length() - 1
            r &= r - 1
            a[u, v] = inv[u] * inv[v]
    vals = np.linalg.eigvalsh(a)
    return float(sum(1.0 / (1.0 - x) for x in vals[: n - 1]))


def scan_pairs(n: int, rows: np.ndarray) -> np.ndarray:
    """Bulk statistics for same-order graphs given as adjacency bitmask rows.

    rows has shape (count, n), dtype uint64, row v of graph i at [i, v].
    Returns float64 (count, 7): edge count, max and min degree, diameters
    of the graph and its complement, and both Kemeny constants; entries
    tied to a disconnected side come back as inf.
    """
    if not (1 <= n <= 62):
        raise ValueError(f"vertex count {n} outside the supported 1..62")
    rows = np.ascontiguousarray(rows, dtype=np.uint64)
    if rows.ndim != 2 or rows.shape[1] != n:
        raise ValueError(f"expected shape (count, {n}), got {rows.shape}")
    count = rows.shape[0]
    out = np.empty((count, 7), dtype=np.float64)
    full = (1 << n) - 1
    for i in range(count):
        g = [int(x) for x in rows[i]]
        degs = [r.bit_count() for r in g]
        gc = [full & ~r & ~(1 << v) for v, r in enumerate(g)]
        degs_c = [full.bit_count() - 1 - d for d in degs]
        diam_g = _diameter(n, g)
        diam_c = _diameter(n, gc)
        out[i, 0] = sum(degs) / 2
        out[i, 1] = max(degs)
        out[i, 2] = min(degs)
        out[i, 3] = diam_g
        out[i, 4] = diam_c
        out[i, 5] = _kemeny(n, g, degs) if diam_g < math.inf else math.inf
        out[i, 6] = _kemeny(n, gc, degs_c) if diam_c < math.inf else math.inf
    return out


def walk_hits(
    offsets: np.ndarray,
    targets: np.ndarray,
    start: int,
    target: int,
    trials: int,
    seed: int,
    trial_start: int = 0,
) -> np.ndarray:
    """Simple-random-walk passage times from start to target, one per trial.

    The walk always takes at least one step, so start == target measures the
    return time.  Trial t draws from the SplitMix64 stream keyed by
    (seed, trial_start + t), which makes batches concatenable: running
    trials in two calls with matching trial_start gives the same samples
    as one big call.
    """
    off = [int(x) for x in offsets]
    tgt = [int(x) for x in targets]
    out = np.empty(trials, dtype=np.int64)
    for t in range(trials):
        state = _mix64((seed + _GOLDEN * (trial_start + t + 1)) & _MASK)
        v = start
        steps = 0
        while True:
            state = (state + _GOLDEN) & _MASK
            x = _mix64(state)
            u = (x >> 11) * _INV_2_53
            base = off[v]
            v = tgt[base + int(u * (off[v + 1] - base))]
            steps += 1
            if v == target:
                break
        out[t] = steps
    return out


def kemeny_hits(
    offsets: np.ndarray,
    targets: np.ndarray,
    start: int,
    trials: int,
    seed: int,
    trial_start: int = 0,
) -> np.ndarray:
    """Passage times to a stationary-random destination, one per trial.

    Each trial first samples a destination vertex proportional to degree,
    rejecting the start vertex, then walks until reaching it.  Scaling the
    sample mean by (2m - deg(start)) / 2m estimates Kemeny's constant.
    """
    off = [int(x) for x in offsets]
    tgt = [int(x) for x in targets]
    two_m = off[-1]
    out = np.empty(trials, dtype=np.int64)
    for t in range(trials):
        state = _mix64((seed + _GOLDEN * (trial_start + t + 1)) & _MASK)
        while True:
            state = (state + _GOLDEN) & _MASK
            x = _mix64(state)
            slot = int(((x >> 11) * _INV_2_53) * two_m)
            j = 0
            while off[j + 1] <= slot:
                j += 1
            if j != start:
                break
        v = start
        steps = 0
        while True:
            state = (state + _GOLDEN) & _MASK
            x = _mix64(state)
            u = (x >> 11) * _INV_2_53
            base = off[v]
            v = tgt[base + int(u * (off[v + 1] - base))]
            steps += 1
            if v == j:
                break
        out[t] = steps
    return out
