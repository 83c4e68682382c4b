"""Command-line entry points.

Subcommands:
  kemeny    three-route constants and structure for graphs on stdin/file
  scan      bulk graph/complement statistics for a graph6 corpus
  bounds    evaluate proven bounds across a corpus, exit 1 on violation
  family    generate a named graph family
  forests   exact spanning-tree / two-forest counts, with a small-graph
            enumeration cross-check
  mc        Monte-Carlo hitting-time and Kemeny estimates
  psi       constants of the degree-window bound

Exit codes: 0 success, 1 violated bound or failed cross-check, 2 bad usage
or malformed input.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import IO, Optional

from . import bounds, engine, families, forests, graph6, kernel, scan, walks
from .graph import Graph, GraphError, format_edge_list, parse_edge_list

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

DEFAULT_SEED = 1729
DEFAULT_TRIALS = 100000


def _env_default(name: str, fallback: str) -> str:
    return os.environ.get(name, fallback)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


class _Out:
    """Output target that only opens real files, leaving stdout unowned."""

    def __init__(self, path: str):
        self.path = path
        self._fh: Optional[IO[str]] = None

    def __enter__(self) -> IO[str]:
        if self.path == "-":
            return sys.stdout
        self._fh = open(self.path, "w", encoding="ascii")
        return self._fh

    def __exit__(self, *exc) -> None:
        if self._fh is not None:
            self._fh.close()


def _load_graphs(text: str) -> list[tuple[str, Graph]]:
    """Detect the input format and return (label, graph) pairs.

    An edge list starts with an 'n m' header of exactly two integers and
    describes one graph; anything else is treated as graph6 lines.  Labels
    are graph6 strings whenever the order permits encoding.
    """
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphError("empty input")
    head = lines[0].split()
    is_edges = len(head) == 2
    if is_edges:
        try:
            int(head[0]), int(head[1])
        except ValueError:
            is_edges = False
    if is_edges:
        g = parse_edge_list(text)
        try:
            label = graph6.emit_graph6(g)
        except graph6.CodecError:
            label = f"<edge list, n={g.n}>"
        return [(label, g)]
    out = []
    for _, payload in graph6.iter_graph6_lines(lines):
        out.append((payload, graph6.parse_graph6(payload)))
    if not out:
        raise GraphError("no graphs in input")
    return out


def _fmt(x: float) -> str:
    return "inf" if math.isinf(x) else repr(x)


def _fmt_int_or_inf(x: float) -> str:
    return "inf" if math.isinf(x) else str(int(x))


def _g7(x) -> str:
    if x is None:
        return "none"
    return "inf" if math.isinf(x) else f"{x:.7g}"


def _jf(x: float):
    # JSON has no inf literal; encode it as a string
    return "inf" if math.isinf(x) else x


def cmd_kemeny(args) -> int:
    pairs = _load_graphs(_read_text(args.input))
    with _Out(args.output) as out:
        for idx, (label, g) in enumerate(pairs, start=1):
            rep = engine.compute_report(g, tolerance=args.tolerance)
            if args.format == "jsonl":
                out.write(
                    json.dumps(
                        {
                            "graph6": label,
                            "n": rep.n,
                            "m": rep.m,
                            "maxdeg": rep.max_deg,
                            "mindeg": rep.min_deg,
                            "diam": "inf" if math.isinf(rep.diam) else int(rep.diam),
                            "connected": rep.connected,
                            "complement_connected": rep.complement_connected,
                            "k_spectral": _jf(rep.k_eig),
                            "k_resistance": _jf(rep.k_resistance),
                            "k_hitting": _jf(rep.k_mfpt),
                            "spanning_trees": rep.spanning_trees,
                        },
                        separators=(",", ":"),
                    )
                    + "\n"
                )
            else:
                out.write(f"graph {idx}: {label}\n")
                out.write(
                    f"  n {rep.n}  m {rep.m}  maxdeg {rep.max_deg}"
                    f"  mindeg {rep.min_deg}  diam {_fmt_int_or_inf(rep.diam)}\n"
                )
                out.write(
                    f"  connected {'yes' if rep.connected else 'no'}"
                    f"  complement_connected"
                    f" {'yes' if rep.complement_connected else 'no'}\n"
                )
                out.write(f"  kemeny_spectral {_fmt(rep.k_eig)}\n")
                out.write(f"  kemeny_resistance {_fmt(rep.k_resistance)}\n")
                out.write(f"  kemeny_hitting {_fmt(rep.k_mfpt)}\n")
                out.write(f"  spanning_trees {rep.spanning_trees}\n")
    return EXIT_OK


def cmd_scan(args) -> int:
    text = _read_text(args.input)
    records = scan.scan_lines(text.splitlines(), threads=args.threads)
    with _Out(args.output) as out:
        if args.format == "jsonl":
            scan.write_jsonl(records, out)
        else:
            scan.write_csv(records, out)
    summary = scan.summarize(records)
    err = sys.stderr
    err.write("# scan summary\n")
    err.write(f"# n {summary.n}\n")
    err.write(f"# total {summary.total}\n")
    err.write(f"# connected_both {summary.connected_both}\n")
    err.write(f"# min_k_overall {_g7(summary.min_k_overall)}\n")
    err.write(f"# max_of_min_k {_g7(summary.max_of_min_k)}\n")
    err.write(f"# red_line_low {_g7(summary.red_line_low)}\n")
    err.write(f"# red_line_high {_g7(summary.red_line_high)}\n")
    err.write(f"# violations_low {summary.violations_low}\n")
    for code in summary.violations_low_graphs:
        err.write(f"#   below_low {code}\n")
    err.write(f"# violations_high {summary.violations_high}\n")
    for code in summary.violations_high_graphs:
        err.write(f"#   above_high {code}\n")
    return EXIT_VIOLATION if summary.violations_low else EXIT_OK


def cmd_bounds(args) -> int:
    pairs = _load_graphs(_read_text(args.input))
    which = None if args.which == "all" else args.which.split(",")
    results = scan.verify_bounds_sweep(
        (g for _, g in pairs), which=which, tol=args.tolerance
    )
    bad = 0
    with _Out(args.output) as out:
        for res in results:
            out.write(
                f"{res.name} checked {res.checked}"
                f" violations {len(res.violations)}\n"
            )
            for v in res.violations:
                out.write(f"  violated {v}\n")
            bad += len(res.violations)
    return EXIT_VIOLATION if bad else EXIT_OK


def cmd_family(args) -> int:
    spec = families.FamilySpec(args.name, tuple(args.params))
    g = spec.generate()
    with _Out(args.output) as out:
        if args.format == "edges":
            out.write(format_edge_list(g))
        else:
            try:
                out.write(graph6.emit_graph6(g) + "\n")
            except graph6.CodecError as exc:
                sys.stderr.write(f"error: {exc}; use --format edges\n")
                return EXIT_USAGE
    return EXIT_OK


def _forest_check(g: Graph, root: int, out: IO[str]) -> int:
    tau_enum = forests.enumerate_spanning_trees(g)
    tau_alg = engine.spanning_tree_count(g)
    if tau_enum != tau_alg:
        out.write(f"MISMATCH spanning_trees enumerated {tau_enum} vs {tau_alg}\n")
        return EXIT_VIOLATION
    out.write(f"spanning_trees {tau_alg} ok\n")
    f_alg = engine.two_forest_matrix(g)
    for i in range(g.n):
        for j in range(i + 1, g.n):
            f_enum = forests.count_separating_two_forests(g, i, j)
            if f_enum != f_alg[i][j]:
                out.write(
                    f"MISMATCH two_forests {i},{j}"
                    f" enumerated {f_enum} vs {f_alg[i][j]}\n"
                )
                return EXIT_VIOLATION
    out.write("two_forest_matrix ok\n")
    rows = forests.check_forest_degree_bound(g, root)
    for row in rows:
        out.write(
            f"root {root} j {row.j} lhs {row.lhs} rhs {row.rhs}"
            f" equality {'yes' if row.equality else 'no'}\n"
        )
    out.write(f"degree_bound ok from root {root}\n")
    return EXIT_OK


def cmd_forests(args) -> int:
    pairs = _load_graphs(_read_text(args.input))
    _, g = pairs[0]
    with _Out(args.output) as out:
        if args.check is not None:
            return _forest_check(g, args.check, out)
        if args.pair is not None:
            i, j = args.pair
            out.write(f"{forests.count_separating_two_forests(g, i, j)}\n")
            return EXIT_OK
        if args.grouped is not None:
            x, y, z = args.grouped
            out.write(f"{forests.count_grouped_two_forests(g, x, y, z)}\n")
            return EXIT_OK
        if args.edge is not None:
            i, j = args.edge
            out.write(f"{forests.count_trees_with_edge(g, i, j)}\n")
            return EXIT_OK
        out.write(f"spanning_trees {engine.spanning_tree_count(g)}\n")
        out.write("two_forest_matrix\n")
        for row in engine.two_forest_matrix(g):
            out.write(" ".join(str(x) for x in row) + "\n")
    return EXIT_OK


def cmd_mc(args) -> int:
    pairs = _load_graphs(_read_text(args.input))
    _, g = pairs[0]
    if args.target == "kemeny":
        est = walks.estimate_kemeny(g, args.start, args.trials, args.seed)
        kind = "kemeny"
    else:
        try:
            target = int(args.target)
        except ValueError:
            raise GraphError(
                f"--target must be a vertex index or 'kemeny', got {args.target!r}"
            ) from None
        est = walks.estimate_mfpt(g, args.start, target, args.trials, args.seed)
        kind = f"mfpt {args.start} -> {target}"
    with _Out(args.output) as out:
        out.write(f"quantity {kind}\n")
        out.write(f"estimate {_fmt(est.mean)}\n")
        out.write(f"std_error {_fmt(est.std_error)}\n")
        out.write(f"trials {est.trials}\n")
        out.write(f"seed {est.seed}\n")
        out.write(f"backend {kernel.backend_name}\n")
    return EXIT_OK


def cmd_psi(args) -> int:
    cons = bounds.psi_constants(args.L, args.U)
    with _Out(args.output) as out:
        out.write(f"L {cons.L:.5g}\n")
        out.write(f"U {cons.U:.5g}\n")
        out.write(f"M {cons.M:.5g}\n")
        out.write(f"eps {cons.eps:.5g}\n")
        out.write(f"psi_minus {cons.psi_minus:.5g}\n")
        out.write(f"C {cons.C:.5g}\n")
        out.write(f"Gamma {cons.Gamma:.5g}\n")
        out.write(f"Theta {cons.Theta:.5g}\n")
        out.write(f"Upsilon {cons.Upsilon:.5g}\n")
        out.write(f"psi_plus {cons.psi_plus:.5g}\n")
    return EXIT_OK


def _add_io(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", "-i", default="-", help="input path or - for stdin")
    p.add_argument("--output", "-o", default="-", help="output path or - for stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kemeny",
        description="Kemeny's constant of graphs and their complements",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kemeny", help="three-route constants for input graphs")
    _add_io(p)
    p.add_argument("--format", choices=["table", "jsonl"], default="table")
    p.add_argument(
        "--tolerance",
        type=float,
        default=float(_env_default("KEMENY_TOL", "1e-9")),
        help="relative agreement required between the three routes",
    )
    p.set_defaults(func=cmd_kemeny)

    p = sub.add_parser("scan", help="bulk statistics for a graph6 corpus")
    _add_io(p)
    p.add_argument("--format", choices=["csv", "jsonl"], default="csv")
    p.add_argument(
        "--threads",
        type=int,
        default=int(_env_default("KEMENY_THREADS", str(os.cpu_count() or 1))),
        help="worker threads for the scan (results do not depend on this)",
    )
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("bounds", help="check proven bounds over input graphs")
    _add_io(p)
    p.add_argument(
        "--which",
        default="all",
        help="comma-separated bound names (default: all known)",
    )
    p.add_argument(
        "--tolerance",
        type=float,
        default=float(_env_default("KEMENY_TOL", "0")),
        help="extra slack before declaring a violation",
    )
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("family", help="generate a named graph family")
    p.add_argument("name", choices=sorted(families.FAMILIES))
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--output", "-o", default="-")
    p.add_argument("--format", choices=["graph6", "edges"], default="graph6")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("forests", help="spanning-tree and two-forest counts")
    _add_io(p)
    p.add_argument("--pair", nargs=2, type=int, metavar=("I", "J"),
                   help="two-forests separating I from J (enumerated)")
    p.add_argument("--grouped", nargs=3, type=int, metavar=("X", "Y", "Z"),
                   help="two-forests with X,Y together and Z apart (enumerated)")
    p.add_argument("--edge", nargs=2, type=int, metavar=("I", "J"),
                   help="spanning trees through edge {I,J} (enumerated)")
    p.add_argument("--check", nargs="?", type=int, const=0, default=None,
                   metavar="ROOT",
                   help="cross-check enumeration against algebra, plus the"
                        " degree-weighted bound from ROOT (default 0)")
    p.set_defaults(func=cmd_forests)

    p = sub.add_parser("mc", help="Monte-Carlo hitting-time estimates")
    _add_io(p)
    p.add_argument("--start", type=int, default=0)
    p.add_argument("--target", default="kemeny",
                   help="vertex index, or 'kemeny' for a stationary target")
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument(
        "--seed",
        type=int,
        default=int(_env_default("KEMENY_SEED", str(DEFAULT_SEED))),
    )
    p.set_defaults(func=cmd_mc)

    p = sub.add_parser("psi", help="degree-window bound constants")
    p.add_argument("--L", type=float, required=True)
    p.add_argument("--U", type=float, required=True)
    p.add_argument("--output", "-o", default="-")
    p.set_defaults(func=cmd_psi)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except BrokenPipeError:
        return EXIT_OK
    except (GraphError, graph6.CodecError, scan.ScanError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (engine.ComputationError, forests.OracleError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
