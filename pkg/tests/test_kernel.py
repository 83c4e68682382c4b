import math

import numpy as np
import pytest

from kemeny import kernel
from kemeny._pykernel import scan_pairs as py_scan
from kemeny._pykernel import walk_hits as py_walk
from kemeny._pykernel import kemeny_hits as py_kemeny
from kemeny.engine import kemeny_eig
from kemeny.families import cycle_graph, petersen
from kemeny.graph import complement, diameter
from kemeny.walks import flat_adjacency

from conftest import load_corpus

both = pytest.mark.skipif(
    "c" not in kernel.available_backends(),
    reason="compiled backend not built",
)


def rows_matrix(graphs):
    return np.array([g.rows for g in graphs], dtype=np.uint64)


def test_backend_present():
    backends = kernel.available_backends()
    assert "python" in backends
    assert kernel.backend_name in backends


def test_scan_columns_against_reference():
    graphs = load_corpus(5)
    out = kernel.scan_pairs(5, rows_matrix(graphs))
    assert out.shape == (len(graphs), 7)
    for g, row in zip(graphs, out):
        m, dmax, dmin, diam_g, diam_gc, k_g, k_gc = row
        assert m == g.m
        assert dmax == max(g.degrees())
        assert dmin == min(g.degrees())
        assert diam_g == diameter(g)
        assert diam_gc == diameter(complement(g))
        for got, want in ((k_g, kemeny_eig(g)), (k_gc, kemeny_eig(complement(g)))):
            if math.isinf(want):
                assert math.isinf(got)
            else:
                assert got == pytest.approx(want, rel=1e-9, abs=1e-9)


def test_scan_single_vertex():
    out = kernel.scan_pairs(1, np.zeros((1, 1), dtype=np.uint64))
    m, dmax, dmin, diam_g, diam_gc, k_g, k_gc = out[0]
    assert (m, dmax, dmin, diam_g, diam_gc) == (0, 0, 0, 0, 0)
    assert k_g == 0.0 and k_gc == 0.0


def test_scan_validates_input():
    with pytest.raises(ValueError):
        kernel.scan_pairs(0, np.zeros((1, 1), dtype=np.uint64))
    with pytest.raises(ValueError):
        kernel.scan_pairs(63, np.zeros((1, 63), dtype=np.uint64))
    with pytest.raises(ValueError):
        kernel.scan_pairs(3, np.zeros((2, 4), dtype=np.uint64))


@both
def test_backends_agree_on_scan():
    c_scan = kernel.available_backends()["c"].scan_pairs
    for n in (4, 6):
        mat = rows_matrix(load_corpus(n))
        a = py_scan(n, mat)
        b = c_scan(n, mat)
        assert a.shape == b.shape
        finite = np.isfinite(a)
        assert np.array_equal(np.isfinite(b), finite)
        assert np.allclose(a[finite], b[finite], rtol=1e-9, atol=1e-12)


@both
def test_backends_walk_streams_bit_identical():
    c_mod = kernel.available_backends()["c"]
    offsets, targets = flat_adjacency(petersen())
    for seed in (0, 1, 987654321):
        a = py_walk(offsets, targets, 0, 7, 400, seed, 0)
        b = c_mod.walk_hits(offsets, targets, 0, 7, 400, seed, 0)
        assert np.array_equal(a, b)
        a = py_kemeny(offsets, targets, 3, 400, seed, 17)
        b = c_mod.kemeny_hits(offsets, targets, 3, 400, seed, 17)
        assert np.array_equal(a, b)


def test_walk_hits_moves_at_least_one_step():
    offsets, targets = flat_adjacency(cycle_graph(4))
    hits = kernel.walk_hits(offsets, targets, 2, 2, 50, 11, 0)
    assert np.all(hits >= 1)


def test_kemeny_hits_never_targets_start():
    # on K_2 the only non-start target sits one step away; a draw that ever
    # picked the start would show up as an even return time instead
    from kemeny.families import complete_graph, star_graph

    offsets, targets = flat_adjacency(complete_graph(2))
    hits = kernel.kemeny_hits(offsets, targets, 0, 200, 5, 0)
    assert np.all(hits == 1)
    # star from the center: targets are leaves, so hit counts are all odd
    offsets, targets = flat_adjacency(star_graph(6))
    hits = kernel.kemeny_hits(offsets, targets, 0, 200, 5, 0)
    assert np.all(hits % 2 == 1)
