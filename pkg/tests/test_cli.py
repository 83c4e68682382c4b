import io
import json
import subprocess
import sys

import pytest

from kemeny.cli import main
from kemeny.scan import CSV_HEADER


def run_cli(argv, stdin=""):
    """Invoke main() in-process, capturing stdout/stderr."""
    old_in, old_out, old_err = sys.stdin, sys.stdout, sys.stderr
    sys.stdin = io.StringIO(stdin)
    sys.stdout = io.StringIO()
    sys.stderr = io.StringIO()
    try:
        code = main(argv)
        return code, sys.stdout.getvalue(), sys.stderr.getvalue()
    finally:
        sys.stdin, sys.stdout, sys.stderr = old_in, old_out, old_err


def get_line(text, key):
    for line in text.splitlines():
        stripped = line.strip()
        if stripped.startswith(key + " "):
            return stripped[len(key) + 1 :]
    raise AssertionError(f"no line for {key!r} in {text!r}")


def test_family_pipes_into_kemeny():
    code, g6, _ = run_cli(["family", "cycle", "5"])
    assert code == 0
    code, out, _ = run_cli(["kemeny"], stdin=g6)
    assert code == 0
    assert float(get_line(out, "kemeny_spectral")) == pytest.approx(4.0)
    assert float(get_line(out, "kemeny_resistance")) == pytest.approx(4.0)
    assert float(get_line(out, "kemeny_hitting")) == pytest.approx(4.0)
    assert get_line(out, "spanning_trees") == "5"
    assert "connected yes" in out


def test_kemeny_jsonl_format():
    code, out, _ = run_cli(["kemeny", "--format", "jsonl"], stdin="Bw\nBg\n")
    assert code == 0
    rows = [json.loads(s) for s in out.splitlines()]
    assert [r["graph6"] for r in rows] == ["Bw", "Bg"]
    assert rows[0]["k_spectral"] == pytest.approx(4 / 3)
    assert rows[0]["connected"] is True
    assert rows[1]["spanning_trees"] == 1


def test_kemeny_accepts_edge_list():
    edge_text = "3 2\n0 1\n1 2\n"
    code, out, _ = run_cli(["kemeny"], stdin=edge_text)
    assert code == 0
    assert float(get_line(out, "kemeny_spectral")) == pytest.approx(1.5)


def test_kemeny_disconnected_reports_inf():
    code, out, _ = run_cli(["kemeny"], stdin="A?\n")
    assert code == 0
    assert get_line(out, "kemeny_spectral") == "inf"
    assert "connected no" in out


def test_scan_csv_and_summary(tmp_path):
    target = tmp_path / "out.csv"
    code, out, err = run_cli(
        ["scan", "--output", str(target), "--threads", "2"],
        stdin="C?\nCL\nC~\n",
    )
    assert code == 0
    text = target.read_text()
    assert text.splitlines()[0] == CSV_HEADER
    assert len(text.splitlines()) == 4
    assert "# scan summary" in err
    assert get_line(err, "# total") == "3"
    assert get_line(err, "# connected_both") == "1"


def test_scan_jsonl_to_stdout():
    code, out, err = run_cli(["scan", "--format", "jsonl"], stdin="Bw\n")
    assert code == 0
    row = json.loads(out.splitlines()[0])
    assert row["k_g"] == pytest.approx(4 / 3)
    assert get_line(err, "# violations_low") == "0"


def test_scan_rejects_mixed_orders():
    code, _, err = run_cli(["scan"], stdin="Bw\nC~\n")
    assert code == 2
    assert "error:" in err


def test_bounds_clean_run():
    code, out, _ = run_cli(
        ["bounds", "--which", "2m_diam,universal"], stdin="C~\nCL\n"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "2m_diam checked 2 violations 0"
    assert lines[1] == "universal checked 2 violations 0"


def test_bounds_unknown_name_is_usage_error():
    code, _, err = run_cli(["bounds", "--which", "bogus"], stdin="C~\n")
    assert code == 2
    assert "unknown bound" in err


def test_family_unknown_or_bad_arity():
    code, _, err = run_cli(["family", "cycle"])
    assert code == 2
    code, _, err = run_cli(["family", "nosuchfamily", "3"])
    assert code == 2


def test_family_edges_format():
    code, out, _ = run_cli(["family", "path", "4", "--format", "edges"])
    assert code == 0
    assert out.splitlines()[0] == "4 3"


def test_family_too_large_for_graph6():
    # 4^3 = 64 vertices exceeds the short-form graph6 limit of 62
    code, _, err = run_cli(["family", "hamming", "3", "4"])
    assert code == 2
    assert "use --format edges" in err
    code, out, _ = run_cli(["family", "hamming", "3", "4", "--format", "edges"])
    assert code == 0
    assert out.splitlines()[0] == "64 288"


def test_forests_check_ok():
    code, out, _ = run_cli(["forests", "--check"], stdin="Cs\n")  # star S_4
    assert code == 0
    assert "spanning_trees 1 ok" in out
    assert "two_forest_matrix ok" in out
    assert "degree_bound ok from root 0" in out


def test_forests_check_custom_root():
    code, out, _ = run_cli(["forests", "--check", "2"], stdin="Cs\n")
    assert code == 0
    assert "degree_bound ok from root 2" in out


def test_forests_counts():
    # triangle: 3 spanning trees, every pair separated by 2 two-forests
    code, out, _ = run_cli(["forests"], stdin="Bw\n")
    assert code == 0
    assert "spanning_trees 3" in out
    code, out, _ = run_cli(["forests", "--pair", "0", "2"], stdin="Bw\n")
    assert code == 0 and out.strip() == "2"
    code, out, _ = run_cli(["forests", "--grouped", "0", "1", "2"], stdin="Bw\n")
    assert code == 0 and out.strip() == "1"
    code, out, _ = run_cli(["forests", "--edge", "0", "1"], stdin="Bw\n")
    assert code == 0 and out.strip() == "2"  # 2 of the 3 triangle trees use it


def test_forests_size_guard_is_usage_error():
    code, _, err = run_cli(["forests", "--check"], stdin="J~~~~~~~~\n")  # K_11
    assert code == 2
    assert "error:" in err


def test_mc_kemeny_output():
    code, out, _ = run_cli(
        ["mc", "--trials", "4000", "--seed", "7"], stdin="DQc\n"
    )
    assert code == 0
    assert get_line(out, "quantity") == "kemeny"
    est = float(get_line(out, "estimate"))
    se = float(get_line(out, "std_error"))
    assert abs(est - 5.5) <= 6 * se  # DQc is a 5-path, K = 5.5
    assert get_line(out, "trials") == "4000"
    assert get_line(out, "seed") == "7"
    assert get_line(out, "backend") in ("c", "python")


def test_mc_mfpt_and_bad_target():
    code, out, _ = run_cli(
        ["mc", "--target", "1", "--trials", "200", "--seed", "3"], stdin="Bg\n"
    )
    assert code == 0
    assert get_line(out, "quantity") == "mfpt 0 -> 1"
    assert float(get_line(out, "estimate")) == 1.0
    code, _, err = run_cli(["mc", "--target", "sideways"], stdin="Bg\n")
    assert code == 2


def test_psi_frozen_output():
    code, out, _ = run_cli(["psi", "--L", "0.125", "--U", "0.5"])
    assert code == 0
    assert get_line(out, "M") == "128"
    assert get_line(out, "psi_minus") == "5.3687e+08"
    assert get_line(out, "Gamma") == "0.12109"
    assert get_line(out, "Upsilon") == "0.96875"
    assert get_line(out, "psi_plus") == "513.61"


def test_psi_invalid_window():
    code, _, err = run_cli(["psi", "--L", "0.5", "--U", "0.5"])
    assert code == 2
    assert "error:" in err


def test_usage_errors():
    code, _, _ = run_cli([])
    assert code == 2
    code, _, _ = run_cli(["nosuchcommand"])
    assert code == 2
    code, _, err = run_cli(["kemeny"], stdin="")
    assert code == 2


def test_installed_entry_point_runs():
    proc = subprocess.run(
        ["kemeny", "family", "complete", "4"],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "C~"
