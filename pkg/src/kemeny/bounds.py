"""Proven bounds on Kemeny's constant, evaluated as checkable reports.

Each function measures the relevant quantities on a concrete graph and
returns BoundReport records stating what was compared, whether the graph
satisfies the hypothesis, and the margin.  Strict bounds are tested as
strict comparisons; weak ones get a 1e-9 tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import engine, linalg
from .graph import Graph, GraphError, _bits, bridges, complement, diameter, is_connected

__all__ = [
    "BoundReport",
    "PsiConstants",
    "SrgParams",
    "DrgClassicalParams",
    "bound_2m_diam",
    "zset_bound",
    "degree_sum_bound",
    "universal_vertex_bound",
    "regular_bounds",
    "join_bound",
    "chain_gamma",
    "bottleneck_ratio",
    "cheeger_sandwich",
    "psi_constants",
    "min_kemeny_degree_bound",
    "two_clique_kemeny",
    "srg_kemeny",
    "srg_complement_params",
    "drg_classical_kemeny",
    "hamming_kemeny",
]

WEAK_TOL = 1e-9
_BOTTLENECK_MAX_N = 24


@dataclass(frozen=True)
class BoundReport:
    """One checked inequality.

    kind is one of strict_upper / weak_upper / strict_lower / weak_lower and
    states how `measured` relates to `bound_value` when satisfied.  slack is
    the signed margin toward violation (positive = satisfied with room).
    When applicable is False the remaining fields are not meaningful.
    """

    name: str
    applicable: bool
    kind: str
    bound_value: float
    measured: float
    satisfied: bool
    slack: float


def _na(name: str, kind: str) -> BoundReport:
    return BoundReport(name, False, kind, math.nan, math.nan, False, math.nan)


def _strict_upper(name, measured, bound) -> BoundReport:
    return BoundReport(
        name, True, "strict_upper", bound, measured, measured < bound, bound - measured
    )


def _weak_upper(name, measured, bound, tol=WEAK_TOL) -> BoundReport:
    return BoundReport(
        name, True, "weak_upper", bound, measured,
        bool(measured <= bound + tol), bound - measured,
    )


def _strict_lower(name, measured, bound) -> BoundReport:
    return BoundReport(
        name, True, "strict_lower", bound, measured, measured > bound, measured - bound
    )


def _weak_lower(name, measured, bound, tol=WEAK_TOL) -> BoundReport:
    return BoundReport(
        name, True, "weak_lower", bound, measured,
        bool(measured >= bound - tol), measured - bound,
    )


def bound_2m_diam(g: Graph) -> list[BoundReport]:
    """K < 2m * diam for connected graphs with at least one edge."""
    if not is_connected(g) or g.n < 2:
        return [_na("2m_diam", "strict_upper")]
    k = engine.kemeny_eig(g)
    return [_strict_upper("2m_diam", k, 2.0 * g.m * diameter(g))]


def _correction_set_sizes(g: Graph, i: int) -> list[int]:
    # |Z_j| for each j != i: neighbors of j other than i that i does not see
    ni = g.rows[i]
    out = []
    for j in range(g.n):
        if j == i:
            continue
        z = g.rows[j] & ~ni & ~(1 << i)
        out.append((z & ~(1 << j)).bit_count())
    return out


def zset_bound(g: Graph, i: int) -> list[BoundReport]:
    """K < sum_j d_j r_{i,j} < 2(n-1) + sum_j |Z_j| r_{i,j}, both strict.

    Z_j collects neighbors of j (other than i) outside i's neighborhood;
    the middle expression is the start-i chain of the hitting-time route.
    """
    if not (0 <= i < g.n):
        raise GraphError(f"vertex {i} out of range")
    if not is_connected(g) or g.n < 2:
        return [_na("zset_kemeny", "strict_upper"), _na("zset_chain", "strict_upper")]
    r = engine.resistance_matrix(g)
    degs = g.degrees()
    others = [j for j in range(g.n) if j != i]
    mid = sum(degs[j] * r[i, j] for j in others)
    zs = _correction_set_sizes(g, i)
    right = 2.0 * (g.n - 1) + sum(z * r[i, j] for z, j in zip(zs, others))
    k = engine.kemeny_eig(g)
    return [
        _strict_upper("zset_kemeny", k, mid),
        _strict_upper("zset_chain", mid, right),
    ]


def degree_sum_bound(g: Graph) -> list[BoundReport]:
    """If max+min degree >= n: K < 2*min_deg*n/(min_deg+max_deg-n+1) < 2n^2."""
    degs = g.degrees()
    dmax, dmin = max(degs), min(degs)
    if not is_connected(g) or dmax + dmin < g.n:
        return [
            _na("degree_sum", "strict_upper"),
            _na("degree_sum_blanket", "strict_upper"),
        ]
    k = engine.kemeny_eig(g)
    bound = 2.0 * dmin * g.n / (dmin + dmax - g.n + 1)
    return [
        _strict_upper("degree_sum", k, bound),
        _strict_upper("degree_sum_blanket", k, 2.0 * g.n**2),
    ]


def universal_vertex_bound(g: Graph) -> list[BoundReport]:
    """If some vertex sees all others: K < 2(n-1)."""
    if g.n < 2 or not is_connected(g) or max(g.degrees()) != g.n - 1:
        return [_na("universal_vertex", "strict_upper")]
    k = engine.kemeny_eig(g)
    return [_strict_upper("universal_vertex", k, 2.0 * (g.n - 1))]


def regular_bounds(g: Graph) -> list[BoundReport]:
    """For connected regular graphs: (n-1)/2 <= K <= 3n^2."""
    degs = g.degrees()
    if not is_connected(g) or len(set(degs)) != 1:
        return [_na("regular_lower", "weak_lower"), _na("regular_upper", "weak_upper")]
    k = engine.kemeny_eig(g)
    return [
        _weak_lower("regular_lower", k, (g.n - 1) / 2.0),
        _weak_upper("regular_upper", k, 3.0 * g.n**2),
    ]


def join_bound(g1: Graph, g2: Graph) -> BoundReport:
    """K(join) <= 3n regardless of whether the parts are connected."""
    from .graph import join

    g = join(g1, g2)
    k = engine.kemeny_eig(g)
    return _weak_upper("join_3n", k, 3.0 * g.n)


def chain_gamma(g: Graph) -> BoundReport:
    """Bridge heuristic Gamma(G) = sum (2Wbar_x - 1)(2Wbar_y - 1) / 2m vs K.

    Strict K > Gamma is known for chains of blocks of order >= 2; single
    vertices can reach equality (the 3-path), so this only reports.
    Bridgeless graphs get Gamma = 0 and a trivially-satisfied report.
    """
    if not is_connected(g):
        raise GraphError("chain comparison needs a connected graph")
    splits = bridges(g)
    k = engine.kemeny_eig(g)
    if not splits:
        return BoundReport("chain_gamma", True, "strict_lower", 0.0, k, True, k)
    gamma = sum(
        (2 * s.wbar_x - 1) * (2 * s.wbar_y - 1) / (2.0 * g.m) for s in splits
    )
    return _strict_lower("chain_gamma", k, gamma)


def bottleneck_ratio(g: Graph) -> tuple[float, frozenset[int]]:
    """Exhaustive bottleneck ratio min |[S, S^c]| / vol(S) over 0 < vol(S) <= m.

    Needs every degree positive and n <= 24; returns the ratio and one
    minimizing subset.  The ratio is 0 exactly when g is disconnected.
    """
    if g.n > _BOTTLENECK_MAX_N:
        raise GraphError(f"exhaustive bottleneck search capped at n={_BOTTLENECK_MAX_N}")
    degs = g.degrees()
    if min(degs) == 0:
        raise GraphError("bottleneck ratio undefined with isolated vertices")
    best = math.inf
    best_set = 0
    for s in range(1, 1 << g.n):
        vol = 0
        for v in _bits(s):
            vol += degs[v]
        if not (0 < vol <= g.m):
            continue
        cut = 0
        comp = ~s
        for v in _bits(s):
            cut += (g.rows[v] & comp).bit_count()
        ratio = cut / vol
        if ratio < best:
            best = ratio
            best_set = s
    return best, frozenset(_bits(best_set))


def _spectral_gap(g: Graph) -> float:
    # 1 - lambda_2 of the normalized adjacency; needs min degree >= 1
    vals = linalg.eigh_symmetric(engine._normalized_adjacency(g)).values
    return float(1.0 - vals[-2])


def cheeger_sandwich(g: Graph) -> list[BoundReport]:
    """Phi^2/2 <= 1 - lambda_2 <= 2 Phi, and 1/(2 Phi) <= K <= 2n/Phi^2."""
    if g.n < 2 or min(g.degrees()) == 0:
        return [
            _na("jerrum_lower", "weak_lower"),
            _na("jerrum_upper", "weak_upper"),
            _na("kemjerr_lower", "weak_lower"),
            _na("kemjerr_upper", "weak_upper"),
        ]
    phi, _ = bottleneck_ratio(g)
    gap = _spectral_gap(g)
    k = engine.kemeny_eig(g)
    lo = math.inf if phi == 0 else 1.0 / (2.0 * phi)
    hi = math.inf if phi == 0 else 2.0 * g.n / phi**2
    return [
        _weak_lower("jerrum_lower", gap, phi**2 / 2.0),
        _weak_upper("jerrum_upper", gap, 2.0 * phi),
        _weak_lower("kemjerr_lower", k, lo),
        _weak_upper("kemjerr_upper", k, hi),
    ]


@dataclass(frozen=True)
class PsiConstants:
    """Constants of the bottleneck argument bounding min{K(G), K(complement)}.

    Derived from degree-fraction window 0 < L < U < 1; psi_minus is the
    threshold constant (2/eps^2) and psi_plus the complement-side constant
    4/(Upsilon * Theta * Gamma).  psi_plus <= 512/(L(1-U)^2) <= psi_minus
    always holds, so the window constant is psi_minus.
    """

    L: float
    U: float
    M: float
    eps: float
    psi_minus: float
    C: float
    Gamma: float
    Theta: float
    Upsilon: float
    psi_plus: float


def psi_constants(L: float, U: float) -> PsiConstants:
    """Evaluate the constant chain at (L, U); all positivity checks enforced."""
    if not (0.0 < L < U < 1.0):
        raise ValueError(f"need 0 < L < U < 1, got L={L}, U={U}")
    M = 8.0 / (L * (1.0 - U))
    eps = 1.0 / M**2
    psi_minus = 2.0 / eps**2
    C = (L - eps * U) / 2.0
    Gamma = ((1.0 - U) / 2.0 - 2.0 * U / M) / 2.0
    Theta = (C * (1.0 - M * eps) - U / M) / (1.0 - L)
    Upsilon = 1.0 - 4.0 * U / (M * (1.0 - U))
    psi_plus = 4.0 / (Upsilon * Theta * Gamma)
    cons = PsiConstants(
        L=L, U=U, M=M, eps=eps, psi_minus=psi_minus, C=C,
        Gamma=Gamma, Theta=Theta, Upsilon=Upsilon, psi_plus=psi_plus,
    )
    checks = [
        ("C window", L / 2.0 > C > L * (1.0 - U) / 2.0 > 0.0),
        ("1 - M*eps > 1/2", 1.0 - M * eps > 0.5),
        ("Gamma floor", Gamma > (1.0 - U) / 8.0),
        ("Theta > 0", Theta > 0.0),
        ("Upsilon > 0", Upsilon > 0.0),
        ("psi_plus cap", psi_plus <= 512.0 / (L * (1.0 - U) ** 2)),
        ("psi_plus <= psi_minus", psi_plus <= psi_minus),
    ]
    for label, ok in checks:
        if not ok:
            raise ValueError(f"constant chain check failed at {label} for L={L}, U={U}")
    return cons


def min_kemeny_degree_bound(g: Graph, U: float) -> list[BoundReport]:
    """If max_deg(G) <= U*n then min{K(G), K(complement)} <= n * Psi_U.

    Psi_U = max(psi_minus(L, U'), 4/(1-U')) with U' = max(U, 1/2) and
    L = (1-U')/4.  Also reports the regular-graph specialization (U = 1/2),
    applicable whenever g is regular.
    """
    if not (0.0 < U < 1.0):
        raise ValueError(f"need 0 < U < 1, got U={U}")
    n = g.n
    degs = g.degrees()
    k_min = min(engine.kemeny_eig(g), engine.kemeny_eig(complement(g)))

    def psi_cap(u: float) -> float:
        u_eff = max(u, 0.5)
        cons = psi_constants((1.0 - u_eff) / 4.0, u_eff)
        return max(cons.psi_minus, 4.0 / (1.0 - u_eff))

    out = []
    if max(degs) <= U * n:
        out.append(_weak_upper("ng_min", k_min, n * psi_cap(U)))
    else:
        out.append(_na("ng_min", "weak_upper"))
    if len(set(degs)) == 1:
        out.append(_weak_upper("ng_min_regular", k_min, n * psi_cap(0.5)))
    else:
        out.append(_na("ng_min_regular", "weak_upper"))
    return out


def two_clique_kemeny(a: int, b: int) -> float:
    """K of two cliques K_a, K_b joined by a single bridge edge.

    Exact rational evaluation, returned as float.  Needs a, b >= 1 and
    a + b >= 3 (a single edge has no interior).
    """
    if a < 1 or b < 1 or a + b < 3:
        raise ValueError(f"need a, b >= 1 and a + b >= 3, got ({a}, {b})")
    m = a * (a - 1) // 2 + b * (b - 1) // 2 + 1
    first = (
        Fraction(1, 2) * (a - 1) ** 3
        + Fraction(1, 2) * (b - 1) ** 3
        + Fraction((b * b - b + 2) * (a - 1) ** 2, a)
        + Fraction((a * a - a + 2) * (b - 1) ** 2, b)
    )
    total = first / m + Fraction((a * a - a + 1) * (b * b - b + 1), 2 * m)
    return float(total)


@dataclass(frozen=True)
class SrgParams:
    """Strongly regular (n, k; a, c): k-regular on n vertices, adjacent pairs
    share a common neighbors, non-adjacent pairs share c."""

    n: int
    k: int
    a: int
    c: int

    def __post_init__(self):
        if not (0 < self.k < self.n):
            raise ValueError(f"need 0 < k < n, got k={self.k}, n={self.n}")
        if self.a < 0 or self.c < 0:
            raise ValueError("common-neighbor counts must be nonnegative")
        lhs = self.k * self.k
        rhs = self.n * self.c + (self.a - self.c) * self.k + self.k - self.c
        if lhs != rhs:
            raise ValueError(
                f"parameters fail the counting identity k^2 = nc+(a-c)k+k-c "
                f"({lhs} != {rhs})"
            )


def srg_kemeny(p: SrgParams) -> float:
    """Closed-form K for a connected strongly regular graph (needs c >= 1)."""
    if p.c < 1:
        raise ValueError("c = 0 means a disconnected union of cliques")
    n, k, a, c = p.n, p.k, p.a, p.c
    num = (n - 2) * (n * c + (a - c) * k + k - c) + (n - 1) * (c - a) * k
    return num / (n * c)


def srg_complement_params(p: SrgParams) -> SrgParams:
    """Parameters of the complement graph (validated on construction)."""
    n, k, a, c = p.n, p.k, p.a, p.c
    return SrgParams(n=n, k=n - k - 1, a=n - 2 - 2 * k + c, c=n - 2 * k + a)


@dataclass(frozen=True)
class DrgClassicalParams:
    """Distance-regular classical parameters (d, b, alpha, beta); d = diameter."""

    d: int
    b: float
    alpha: float
    beta: float

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"diameter parameter must be >= 1, got {self.d}")


def _bracket(i: float, b: float) -> float:
    # [i]_b = 1 + b + ... + b^{i-1}, extended to negative i via (b^i - 1)/(b - 1)
    if b == 1:
        return float(i)
    return (b**i - 1.0) / (b - 1.0)


def drg_classical_kemeny(
    p: DrgClassicalParams,
) -> tuple[list[float], list[float], float]:
    """Eigenvalues, multiplicities, and K from classical parameters.

    theta_i = [d-i](beta - alpha [i]) - [i]; multiplicities follow the
    standard product formula.  Validates positive multiplicities that sum
    (with the trivial eigenvalue) to an integer vertex count.
    """
    d, b, al, be = p.d, p.b, p.alpha, p.beta

    def br(i: float) -> float:
        return _bracket(i, b)

    k = be * br(d)
    thetas = [br(d - i) * (be - al * br(i)) - br(i) for i in range(d + 1)]
    if abs(thetas[0] - k) > 1e-9 * max(1.0, abs(k)):
        raise ValueError("theta_0 does not equal the vertex degree")

    def alpha_j(j: int) -> float:
        return b * br(d - j) * (be - al * br(j)) * (1 + al * br(d - j) + b ** (d - j) * be)

    def beta_j(j: int) -> float:
        return br(j) * (be - al * br(j) + b**j) * (1 + al * br(d - j))

    denom_base = 1 + al * br(d) + b**d * be
    mults = []
    for i in range(1, d + 1):
        num = 1 + al * br(d - 2 * i) + b ** (d - 2 * i) * be
        for j in range(0, i):
            num *= alpha_j(j)
        den = denom_base
        for j in range(1, i + 1):
            den *= beta_j(j)
        mi = num / den
        if mi <= 0:
            raise ValueError(f"non-positive multiplicity m_{i} = {mi}")
        mults.append(mi)
    total = 1.0 + sum(mults)
    if abs(total - round(total)) > 1e-6 * max(1.0, total):
        raise ValueError(f"multiplicities sum to non-integer order {total}")
    kemeny = 0.0
    for mi, th in zip(mults, thetas[1:]):
        if k - th <= 0:
            raise ValueError(f"eigenvalue {th} not below the degree {k}")
        kemeny += mi * k / (k - th)
    return thetas, mults, kemeny


def hamming_kemeny(d: int, q: int) -> float:
    """Closed-form K of the Hamming graph H(d, q) on q^d vertices."""
    if d < 1 or q < 2:
        raise ValueError(f"need d >= 1 and q >= 2, got ({d}, {q})")
    total = Fraction(0)
    for j in range(1, d + 1):
        total += Fraction(math.comb(d, j) * (q - 1) ** (j + 1), j)
    return float(Fraction(d, q) * total)
