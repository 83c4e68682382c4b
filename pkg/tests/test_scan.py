import io
import json
import math

import pytest

from kemeny.graph6 import parse_graph6
from kemeny.scan import (
    CSV_HEADER,
    SWEEP_REGISTRY,
    ScanError,
    scan_lines,
    summarize,
    verify_bounds_sweep,
    write_csv,
    write_jsonl,
)

from conftest import load_corpus, load_corpus_lines


def csv_text(records):
    buf = io.StringIO()
    write_csv(records, buf)
    return buf.getvalue()


def test_header_is_frozen():
    assert CSV_HEADER == (
        "graph6,n,m,maxdeg,mindeg,diam_g,diam_gc,k_g,k_gc,min_k,product_k"
    )


def test_scan_records_align_with_input():
    lines = load_corpus_lines(4)
    records = scan_lines(lines)
    assert len(records) == 11
    assert [r.graph6 for r in records] == [
        payload for payload in (s.strip() for s in lines) if payload
    ]
    for r in records:
        g = parse_graph6(r.graph6)
        assert r.m == g.m
        assert r.min_k == min(r.k_g, r.k_gc)


def test_thread_count_does_not_change_bytes():
    lines = load_corpus_lines(7)  # 1044 graphs, several chunks
    a = csv_text(scan_lines(lines, threads=1))
    b = csv_text(scan_lines(lines, threads=4))
    assert a == b
    assert a.splitlines()[0] == CSV_HEADER


def test_disconnected_pairs_render_inf():
    text = csv_text(scan_lines(["C?"]))  # empty graph on 4 vertices
    line = text.splitlines()[1]
    fields = line.split(",")
    assert fields[0] == "C?"
    assert fields[7] == "inf"  # k_g
    assert fields[5] == "inf"  # diam_g
    assert fields[8] != "inf"  # complement is K_4


def test_jsonl_shape():
    buf = io.StringIO()
    write_jsonl(scan_lines(["C?", "C~"]), buf)
    rows = [json.loads(s) for s in buf.getvalue().splitlines()]
    assert len(rows) == 2
    assert rows[0]["k_g"] == "inf"
    assert rows[1]["k_g"] == pytest.approx(2.25)
    assert set(rows[0]) == {
        "graph6", "n", "m", "maxdeg", "mindeg", "diam_g", "diam_gc",
        "k_g", "k_gc", "min_k", "product_k",
    }


def test_mixed_order_corpus_rejected():
    with pytest.raises(ScanError) as exc:
        scan_lines(["C?", "Bw"])
    assert "line 2" in str(exc.value)


def test_bad_line_reported_with_number():
    with pytest.raises(ScanError) as exc:
        scan_lines(["C?", "", "notgraph6atall"])
    assert "line 3" in str(exc.value)


def test_empty_corpus_rejected():
    with pytest.raises(ScanError):
        scan_lines(["", "   "])
    with pytest.raises(ScanError):
        summarize([])
    with pytest.raises(ValueError):
        scan_lines(["C?"], threads=0)


def test_summary_order_4():
    s = summarize(scan_lines(load_corpus_lines(4)))
    assert s.n == 4 and s.total == 11
    assert s.connected_both == 1  # the path on 4 vertices, self-complementary
    assert s.min_k_overall == pytest.approx(2.25)
    assert s.max_of_min_k == pytest.approx(19 / 6)
    assert s.red_line_low == pytest.approx(2.25)
    assert s.violations_low == 0
    # at order 4 the self-complementary path sits above the high curve;
    # the curve is only a conjecture for the larger corpora
    assert s.violations_high == 1
    assert s.violations_high_graphs == ("CL",)


def test_summary_order_5():
    s = summarize(scan_lines(load_corpus_lines(5)))
    assert s.connected_both == 8
    assert s.min_k_overall == pytest.approx(3.2)
    # the 5-cycle is self-complementary and lands exactly on the high curve
    assert s.max_of_min_k == pytest.approx(4.0)
    assert s.red_line_high == pytest.approx(4.0)
    assert s.violations_low == 0
    assert s.violations_high == 0


def test_summary_small_orders_have_no_pairs():
    s = summarize(scan_lines(load_corpus_lines(2)))
    assert s.connected_both == 0
    assert s.max_of_min_k is None


def test_sweep_known_names_only():
    with pytest.raises(ValueError):
        verify_bounds_sweep([], which=["2m_diam", "nope"])


def test_sweep_clean_on_order_5():
    graphs = load_corpus(5)
    results = verify_bounds_sweep(graphs)
    assert {r.name for r in results} == set(SWEEP_REGISTRY)
    for r in results:
        assert r.checked == 34
        assert r.violations == ()


def test_sweep_subset_selection():
    graphs = load_corpus(4)
    results = verify_bounds_sweep(graphs, which=["regular", "universal"])
    assert [r.name for r in results] == ["regular", "universal"]
