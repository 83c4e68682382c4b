"""Corpus scans: bulk Kemeny statistics for graph/complement pairs.

Reads graph6 lines, runs the compute kernel over fixed-size chunks (a
thread pool sees real parallelism with the compiled backend since the
kernel drops the GIL), and emits per-graph records plus a summary against
the two reference curves of the scatter experiment:

  low  = (n-1)^2 / n            no connected graph may fall below this
  high = 3 (n-1)^2 / (2 (n+1))  the smaller of the pair stays below this
                                on every corpus scanned so far (reported,
                                not asserted)
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import IO, Iterable, Optional

import numpy as np

from . import bounds, graph6, kernel
from .graph import Graph

__all__ = [
    "ScanError",
    "ScanRecord",
    "ScanSummary",
    "SweepResult",
    "scan_lines",
    "summarize",
    "write_csv",
    "write_jsonl",
    "verify_bounds_sweep",
    "CSV_HEADER",
    "SWEEP_REGISTRY",
]

CSV_HEADER = "graph6,n,m,maxdeg,mindeg,diam_g,diam_gc,k_g,k_gc,min_k,product_k"

_CHUNK = 256
_VIOLATION_CAP = 100
_RED_TOL = 1e-9


class ScanError(ValueError):
    pass


@dataclass(frozen=True)
class ScanRecord:
    """One graph/complement pair: sizes, degrees, diameters, Kemeny values."""

    graph6: str
    n: int
    m: int
    max_deg: int
    min_deg: int
    diam_g: float
    diam_gc: float
    k_g: float
    k_gc: float
    min_k: float
    product_k: float


@dataclass(frozen=True)
class ScanSummary:
    """Corpus-level aggregates against the two reference curves.

    max_of_min_k ranges over pairs with both sides connected and is None
    when the corpus has no such pair (orders 1 to 3).
    """

    n: int
    total: int
    connected_both: int
    min_k_overall: float
    max_of_min_k: Optional[float]
    red_line_low: float
    red_line_high: float
    violations_low: int
    violations_low_graphs: tuple[str, ...]
    violations_high: int
    violations_high_graphs: tuple[str, ...]


def _parse_corpus(lines: Iterable[str]) -> tuple[int, list[str], np.ndarray]:
    payloads = []
    n = -1
    entries = graph6.iter_graph6_lines(lines)
    if not entries:
        raise ScanError("no graph6 lines in input")
    rows_list = []
    for lineno, payload in entries:
        try:
            g = graph6.parse_graph6(payload)
        except graph6.CodecError as exc:
            raise ScanError(f"line {lineno}: {exc}") from None
        if n < 0:
            n = g.n
        elif g.n != n:
            raise ScanError(
                f"line {lineno}: graph of order {g.n} in a corpus of order {n}"
            )
        payloads.append(payload)
        rows_list.append(g.rows)
    rows = np.array(rows_list, dtype=np.uint64)
    return n, payloads, rows


def scan_lines(lines: Iterable[str], threads: int = 1) -> list[ScanRecord]:
    """Scan a same-order graph6 corpus; output order follows input order.

    Results are byte-identical for any thread count: chunks are mapped in
    order and the per-graph arithmetic does not depend on the split.
    """
    if threads < 1:
        raise ValueError(f"thread count must be positive, got {threads}")
    n, payloads, rows = _parse_corpus(lines)
    chunks = [rows[i : i + _CHUNK] for i in range(0, rows.shape[0], _CHUNK)]

    def work(chunk: np.ndarray) -> np.ndarray:
        return kernel.scan_pairs(n, chunk)

    if threads == 1 or len(chunks) == 1:
        parts = [work(c) for c in chunks]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(work, chunks))
    stats = np.vstack(parts) if parts else np.empty((0, 7))
    records = []
    for payload, row in zip(payloads, stats):
        k_g = float(row[5])
        k_gc = float(row[6])
        records.append(
            ScanRecord(
                graph6=payload,
                n=n,
                m=int(row[0]),
                max_deg=int(row[1]),
                min_deg=int(row[2]),
                diam_g=float(row[3]),
                diam_gc=float(row[4]),
                k_g=k_g,
                k_gc=k_gc,
                min_k=min(k_g, k_gc),
                product_k=k_g * k_gc,
            )
        )
    return records


def _fmt_int_or_inf(x: float) -> str:
    return "inf" if math.isinf(x) else str(int(x))


def _fmt_float(x: float) -> str:
    return "inf" if math.isinf(x) else repr(x)


def write_csv(records: Iterable[ScanRecord], fh: IO[str]) -> None:
    """Stable text form: ints verbatim, floats via repr, inf as 'inf'."""
    fh.write(CSV_HEADER + "\n")
    for r in records:
        fh.write(
            f"{r.graph6},{r.n},{r.m},{r.max_deg},{r.min_deg},"
            f"{_fmt_int_or_inf(r.diam_g)},{_fmt_int_or_inf(r.diam_gc)},"
            f"{_fmt_float(r.k_g)},{_fmt_float(r.k_gc)},"
            f"{_fmt_float(r.min_k)},{_fmt_float(r.product_k)}\n"
        )


def _jsonable(x: float):
    return "inf" if math.isinf(x) else x


def write_jsonl(records: Iterable[ScanRecord], fh: IO[str]) -> None:
    for r in records:
        fh.write(
            json.dumps(
                {
                    "graph6": r.graph6,
                    "n": r.n,
                    "m": r.m,
                    "maxdeg": r.max_deg,
                    "mindeg": r.min_deg,
                    "diam_g": _jsonable(r.diam_g),
                    "diam_gc": _jsonable(r.diam_gc),
                    "k_g": _jsonable(r.k_g),
                    "k_gc": _jsonable(r.k_gc),
                    "min_k": _jsonable(r.min_k),
                    "product_k": _jsonable(r.product_k),
                },
                separators=(",", ":"),
            )
            + "\n"
        )


def summarize(records: list[ScanRecord]) -> ScanSummary:
    if not records:
        raise ScanError("nothing to summarize")
    n = records[0].n
    low = (n - 1) ** 2 / n
    high = 3.0 * (n - 1) ** 2 / (2.0 * (n + 1))
    both = [r for r in records if math.isfinite(r.k_g) and math.isfinite(r.k_gc)]
    bad_low = []
    for r in records:
        if (math.isfinite(r.k_g) and r.k_g < low - _RED_TOL) or (
            math.isfinite(r.k_gc) and r.k_gc < low - _RED_TOL
        ):
            bad_low.append(r.graph6)
    bad_high = [r.graph6 for r in both if r.min_k > high + _RED_TOL]
    return ScanSummary(
        n=n,
        total=len(records),
        connected_both=len(both),
        min_k_overall=min(r.min_k for r in records),
        max_of_min_k=max((r.min_k for r in both), default=None),
        red_line_low=low,
        red_line_high=high,
        violations_low=len(bad_low),
        violations_low_graphs=tuple(bad_low[:_VIOLATION_CAP]),
        violations_high=len(bad_high),
        violations_high_graphs=tuple(bad_high[:_VIOLATION_CAP]),
    )


@dataclass(frozen=True)
class SweepResult:
    """One bound checked across a corpus: reports evaluated and offenders."""

    name: str
    checked: int
    violations: tuple[str, ...]


def _zset_at_densest(g: Graph):
    degs = g.degrees()
    return bounds.zset_bound(g, degs.index(max(degs)))


def _cheeger_jerrum(g: Graph):
    return bounds.cheeger_sandwich(g)[:2]


def _cheeger_kemjerr(g: Graph):
    return bounds.cheeger_sandwich(g)[2:]


def _ng_min_half(g: Graph):
    return bounds.min_kemeny_degree_bound(g, 0.5)


SWEEP_REGISTRY = {
    "2m_diam": bounds.bound_2m_diam,
    "zset": _zset_at_densest,
    "degree_sum": bounds.degree_sum_bound,
    "universal": bounds.universal_vertex_bound,
    "jerrum": _cheeger_jerrum,
    "kemjerr": _cheeger_kemjerr,
    "regular": bounds.regular_bounds,
    "ng_min": _ng_min_half,
}


def verify_bounds_sweep(
    graphs: Iterable[Graph],
    which: Optional[Iterable[str]] = None,
    tol: float = 0.0,
) -> list[SweepResult]:
    """Evaluate selected proven bounds on every graph; collect offenders.

    A violation is an applicable report that failed with slack below -tol.
    Inapplicable reports (hypothesis not met) count as checked but can
    never violate.
    """
    names = list(SWEEP_REGISTRY) if which is None else list(which)
    for name in names:
        if name not in SWEEP_REGISTRY:
            raise ValueError(f"unknown bound {name!r}; known: {sorted(SWEEP_REGISTRY)}")
    checked = {name: 0 for name in names}
    offenders: dict[str, list[str]] = {name: [] for name in names}
    for g in graphs:
        code = graph6.emit_graph6(g)
        for name in names:
            reports = SWEEP_REGISTRY[name](g)
            checked[name] += 1
            for r in reports:
                if r.applicable and not r.satisfied and not (r.slack >= -tol):
                    if len(offenders[name]) < _VIOLATION_CAP:
                        offenders[name].append(f"{code}:{r.name}")
    return [
        SweepResult(name=name, checked=checked[name], violations=tuple(offenders[name]))
        for name in names
    ]
