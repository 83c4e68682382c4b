# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled compute kernels behind kemeny.kernel.

Mirrors kemeny._pykernel exactly: same scan columns, same SplitMix64
stream and truncation rules.  The per-graph scan loop and the walk loops
run without the GIL so thread pools get real parallelism.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport INFINITY, fabs, sqrt

cnp.import_array()

cdef extern from *:
    """
    #define KPOPCOUNT(x) __builtin_popcountll(x)
    #define KCTZ(x) __builtin_ctzll(x)
    """
    int KPOPCOUNT(unsigned long long x) nogil
    int KCTZ(unsigned long long x) nogil

backend_name = "c"

# vertex counts are capped at 62 (graph6 short form), buffers at 64
cdef enum:
    MAXN = 64

cdef unsigned long long GOLDEN = 0x9E3779B97F4A7C15ULL
cdef double INV_2_53 = 1.0 / 9007199254740992.0
cdef double OFF_EPS = 1e-13
cdef int MAX_SWEEPS = 100


cdef inline unsigned long long mix64(unsigned long long z) nogil:
    z ^= z >> 30
    z *= 0xBF58476D1CE4E5B9ULL
    z ^= z >> 27
    z *= 0x94D049BB133111EBULL
    z ^= z >> 31
    return z


cdef int ecc_from(unsigned long long* rows, int src,
                  unsigned long long* visited_out) nogil:
    cdef unsigned long long visited = 1ULL << src
    cdef unsigned long long frontier = visited
    cdef unsigned long long nxt, f
    cdef int ecc = 0
    cdef int v
    while True:
        nxt = 0
        f = frontier
        while f:
            v = KCTZ(f)
            f &= f - 1
            nxt |= rows[v]
        nxt &= ~visited
        if nxt == 0:
            visited_out[0] = visited
            return ecc
        visited |= nxt
        frontier = nxt
        ecc += 1


cdef double diameter_of(int n, unsigned long long* rows) nogil:
    cdef unsigned long long visited
    cdef int diam, ecc, v
    if n == 1:
        return 0.0
    diam = ecc_from(rows, 0, &visited)
    if visited != (1ULL << n) - 1:
        return INFINITY
    for v in range(1, n):
        ecc = ecc_from(rows, v, &visited)
        if ecc > diam:
            diam = ecc
    return <double>diam


cdef double kemeny_of(int n, unsigned long long* rows, int* degs) nogil:
    # cyclic Jacobi on the degree-normalized adjacency, eigenvalues only;
    # the caller guarantees connectivity so all degrees are positive
    cdef double a[MAXN * MAXN]
    cdef double inv[MAXN]
    cdef double vals[MAXN]
    cdef unsigned long long r
    cdef int u, v, i, p, q, sweep
    cdef double off, apq, app, aqq, theta, t, c, s, aip, aiq, key, k
    if n == 1:
        return 0.0
    for u in range(n):
        inv[u] = 1.0 / sqrt(<double>degs[u])
    for u in range(n * n):
        a[u] = 0.0
    for u in range(n):
        r = rows[u]
        while r:
            v = KCTZ(r)
            r &= r - 1
            a[u * n + v] = inv[u] * inv[v]
    for sweep in range(MAX_SWEEPS):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                if fabs(a[p * n + q]) > off:
                    off = fabs(a[p * n + q])
        if off <= OFF_EPS:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p * n + q]
                if fabs(apq) <= OFF_EPS:
                    continue
                app = a[p * n + p]
                aqq = a[q * n + q]
                theta = 0.5 * (aqq - app) / apq
                if theta >= 0:
                    t = 1.0 / (theta + sqrt(1.0 + theta * theta))
                else:
                    t = -1.0 / (sqrt(1.0 + theta * theta) - theta)
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                a[p * n + p] = app - t * apq
                a[q * n + q] = aqq + t * apq
                a[p * n + q] = 0.0
                a[q * n + p] = 0.0
                for i in range(n):
                    if i == p or i == q:
                        continue
                    aip = a[i * n + p]
                    aiq = a[i * n + q]
                    a[i * n + p] = c * aip - s * aiq
                    a[p * n + i] = a[i * n + p]
                    a[i * n + q] = s * aip + c * aiq
                    a[q * n + i] = a[i * n + q]
    for i in range(n):
        vals[i] = a[i * n + i]
    for i in range(1, n):
        key = vals[i]
        p = i - 1
        while p >= 0 and vals[p] > key:
            vals[p + 1] = vals[p]
            p -= 1
        vals[p + 1] = key
    k = 0.0
    for i in range(n - 1):
        k += 1.0 / (1.0 - vals[i])
    return k


cdef void scan_one(int n, const unsigned long long* rows, double* out) nogil:
    cdef unsigned long long full = (1ULL << n) - 1
    cdef unsigned long long comp[MAXN]
    cdef int degs[MAXN]
    cdef int degc[MAXN]
    cdef int v, dmax, dmin
    cdef long m2 = 0
    cdef double diam_g, diam_c
    dmax = 0
    dmin = n
    for v in range(n):
        degs[v] = KPOPCOUNT(rows[v])
        degc[v] = n - 1 - degs[v]
        comp[v] = full & ~rows[v] & ~(1ULL << v)
        m2 += degs[v]
        if degs[v] > dmax:
            dmax = degs[v]
        if degs[v] < dmin:
            dmin = degs[v]
    diam_g = diameter_of(n, <unsigned long long*>rows)
    diam_c = diameter_of(n, comp)
    out[0] = m2 / 2.0
    out[1] = <double>dmax
    out[2] = <double>dmin
    out[3] = diam_g
    out[4] = diam_c
    if diam_g == INFINITY:
        out[5] = INFINITY
    else:
        out[5] = kemeny_of(n, <unsigned long long*>rows, degs)
    if diam_c == INFINITY:
        out[6] = INFINITY
    else:
        out[6] = kemeny_of(n, comp, degc)


def scan_pairs(int n, rows):
    """Bulk statistics for same-order graphs given as adjacency bitmask rows.

    rows has shape (count, n), dtype uint64, row v of graph i at [i, v].
    Returns float64 (count, 7): edge count, max and min degree, diameters
    of the graph and its complement, and both Kemeny constants; entries
    tied to a disconnected side come back as inf.
    """
    if not (1 <= n <= 62):
        raise ValueError(f"vertex count {n} outside the supported 1..62")
    arr = np.ascontiguousarray(rows, dtype=np.uint64)
    if arr.ndim != 2 or arr.shape[1] != n:
        raise ValueError(f"expected shape (count, {n}), got {arr.shape}")
    cdef cnp.uint64_t[:, ::1] rv = arr
    cdef Py_ssize_t count = rv.shape[0]
    out = np.empty((count, 7), dtype=np.float64)
    cdef double[:, ::1] ov = out
    cdef Py_ssize_t i
    if count == 0:
        return out
    with nogil:
        for i in range(count):
            scan_one(n, &rv[i, 0], &ov[i, 0])
    return out


def walk_hits(offsets, targets, int start, int target, long trials,
              unsigned long long seed, long trial_start=0):
    """Simple-random-walk passage times from start to target, one per trial.

    The walk always takes at least one step, so start == target measures the
    return time.  Trial t draws from the SplitMix64 stream keyed by
    (seed, trial_start + t), which makes batches concatenable: running
    trials in two calls with matching trial_start gives the same samples
    as one big call.
    """
    cdef cnp.int64_t[::1] off = np.ascontiguousarray(offsets, dtype=np.int64)
    cdef cnp.int32_t[::1] tgt = np.ascontiguousarray(targets, dtype=np.int32)
    out = np.empty(trials, dtype=np.int64)
    cdef cnp.int64_t[::1] ov = out
    cdef long t
    cdef unsigned long long state, x
    cdef double u
    cdef cnp.int64_t base, steps
    cdef int v
    if trials <= 0:
        return out
    with nogil:
        for t in range(trials):
            state = mix64(seed + GOLDEN * (<unsigned long long>(trial_start + t + 1)))
            v = start
            steps = 0
            while True:
                state += GOLDEN
                x = mix64(state)
                u = <double>(x >> 11) * INV_2_53
                base = off[v]
                v = tgt[base + <cnp.int64_t>(u * <double>(off[v + 1] - base))]
                steps += 1
                if v == target:
                    break
            ov[t] = steps
    return out


def kemeny_hits(offsets, targets, int start, long trials,
                unsigned long long seed, long trial_start=0):
    """Passage times to a stationary-random destination, one per trial.

    Each trial first samples a destination vertex proportional to degree,
    rejecting the start vertex, then walks until reaching it.  Scaling the
    sample mean by (2m - deg(start)) / 2m estimates Kemeny's constant.
    """
    cdef cnp.int64_t[::1] off = np.ascontiguousarray(offsets, dtype=np.int64)
    cdef cnp.int32_t[::1] tgt = np.ascontiguousarray(targets, dtype=np.int32)
    out = np.empty(trials, dtype=np.int64)
    cdef cnp.int64_t[::1] ov = out
    cdef cnp.int64_t two_m = off[off.shape[0] - 1]
    cdef long t
    cdef unsigned long long state, x
    cdef double u
    cdef cnp.int64_t base, steps, slot
    cdef int v, j
    if trials <= 0:
        return out
    with nogil:
        for t in range(trials):
            state = mix64(seed + GOLDEN * (<unsigned long long>(trial_start + t + 1)))
            while True:
                state += GOLDEN
                x = mix64(state)
                slot = <cnp.int64_t>((<double>(x >> 11) * INV_2_53) * <double>two_m)
                j = 0
                while off[j + 1] <= slot:
                    j += 1
                if j != start:
                    break
            v = start
            steps = 0
            while True:
                state += GOLDEN
                x = mix64(state)
                u = <double>(x >> 11) * INV_2_53
                base = off[v]
                v = tgt[base + <cnp.int64_t>(u * <double>(off[v + 1] - base))]
                steps += 1
                if v == j:
                    break
            ov[t] = steps
    return out
