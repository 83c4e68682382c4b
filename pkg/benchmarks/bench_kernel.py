#!/usr/bin/env python3
"""Compare the compiled kernel against the pure-Python fallback.

Runs the same two workloads through every available backend, checks that
the outputs agree, and prints wall times plus the speedup.  Usage:

    python benchmarks/bench_kernel.py [--repeat N]
"""

from __future__ import annotations

import argparse
import pathlib
import sys
import time

import numpy as np

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from kemeny import graph6
from kemeny.families import petersen
from kemeny.kernel import available_backends
from kemeny.walks import flat_adjacency

DATA = pathlib.Path(__file__).resolve().parents[1] / "tests" / "data"


def load_corpus(n: int) -> np.ndarray:
    path = DATA / f"graphs{n}.g6"
    rows = []
    with open(path, encoding="ascii") as fh:
        for _, payload in graph6.iter_graph6_lines(fh):
            rows.append(graph6.parse_graph6(payload).rows)
    return np.array(rows, dtype=np.uint64)


def time_call(fn, *args, repeat: int):
    best = None
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, out


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--trials", type=int, default=20000)
    args = ap.parse_args()

    backends = available_backends()
    if len(backends) < 2:
        print(f"only {sorted(backends)} available; build the extension to compare")

    rows7 = load_corpus(7)
    pet = petersen()
    offsets, targets = flat_adjacency(pet)

    workloads = [
        ("scan n=7 x1044", lambda mod: mod.scan_pairs(7, rows7)),
        (
            f"kemeny walks x{args.trials}",
            lambda mod: mod.kemeny_hits(offsets, targets, 0, args.trials, 1729, 0),
        ),
    ]

    print(f"{'workload':<24}" + "".join(f"{name:>12}" for name in backends) + f"{'speedup':>10}")
    for label, run in workloads:
        times = {}
        outs = {}
        for name, mod in backends.items():
            times[name], outs[name] = time_call(run, mod, repeat=args.repeat)
        if len(outs) == 2:
            a, b = outs.values()
            if a.dtype.kind == "f":
                assert np.allclose(a, b, rtol=1e-9, atol=1e-9, equal_nan=True)
            else:
                assert np.array_equal(a, b), "backends disagree on walk samples"
        row = f"{label:<24}"
        for name in backends:
            row += f"{times[name]:>11.4f}s"
        if len(times) == 2:
            t = list(times.values())
            row += f"{t[0] / t[1]:>9.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())
