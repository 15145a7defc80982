from __future__ import annotations

import numpy as np
import pytest

from citewalk.graph import connected_components, is_connected
from citewalk.sbm import (
    BenchmarkRecord,
    SBMSpec,
    _triu_decode,
    generate_sbm,
    probs_for_mean_degree,
    run_benchmark,
    subgraph_labels,
    summarize_benchmark,
    write_benchmark_csv,
)
from citewalk.walks import WalkConfig


def test_spec_validation():
    with pytest.raises(ValueError, match="assortative"):
        SBMSpec(block_sizes=(5, 5), p_in=0.1, p_out=0.5)
    SBMSpec(block_sizes=(5, 5), p_in=0.1, p_out=0.5, assortative=False)
    with pytest.raises(ValueError):
        SBMSpec(block_sizes=(), p_in=0.5, p_out=0.1)
    with pytest.raises(ValueError):
        SBMSpec(block_sizes=(3,), p_in=1.5, p_out=0.1)


def test_complete_block():
    g, labels = generate_sbm(SBMSpec(block_sizes=(3,), p_in=1.0, p_out=0.0, seed=0))
    assert g.node_count == 3
    assert g.edge_count == 3
    assert labels.tolist() == [0, 0, 0]


def test_zero_cross_probability_disconnects_blocks():
    g, labels = generate_sbm(SBMSpec(block_sizes=(5, 5), p_in=1.0, p_out=0.0, seed=1))
    comp = connected_components(g)
    assert len(set(comp.tolist())) == 2
    for c in (0, 1):
        members = labels[comp == c]
        assert len(set(members.tolist())) == 1


def test_triu_decode_roundtrip():
    for s in (2, 3, 5, 8, 13, 40):
        n_pairs = s * (s - 1) // 2
        i, j = _triu_decode(np.arange(n_pairs), s)
        iu, ju = np.triu_indices(s, k=1)
        assert np.array_equal(i, iu)
        assert np.array_equal(j, ju)


@pytest.mark.parametrize("p_in,p_out", [(0.1, 0.01), (0.8, 0.3)])
def test_edge_counts_within_4_sigma(p_in, p_out):
    # second parameter set exercises the dense sampling branch
    spec = SBMSpec(block_sizes=(100, 100), p_in=p_in, p_out=p_out, seed=7)
    g, labels = generate_sbm(spec)
    src = np.repeat(np.arange(g.node_count), g.degrees)
    dst = g.indices
    half = src < dst
    la, lb = labels[src[half]], labels[dst[half]]
    within0 = int(np.sum((la == 0) & (lb == 0)))
    within1 = int(np.sum((la == 1) & (lb == 1)))
    cross = int(np.sum(la != lb))
    n_within = 100 * 99 // 2
    n_cross = 100 * 100
    for observed, n_pairs, p in ((within0, n_within, p_in), (within1, n_within, p_in), (cross, n_cross, p_out)):
        mean = n_pairs * p
        sigma = np.sqrt(n_pairs * p * (1 - p))
        assert abs(observed - mean) < 4 * sigma


def test_generation_deterministic():
    spec = SBMSpec(block_sizes=(40, 40, 40), p_in=0.2, p_out=0.02, seed=5)
    g1, _ = generate_sbm(spec)
    g2, _ = generate_sbm(spec)
    assert np.array_equal(g1.indptr, g2.indptr)
    assert np.array_equal(g1.indices, g2.indices)
    g3, _ = generate_sbm(SBMSpec(block_sizes=(40, 40, 40), p_in=0.2, p_out=0.02, seed=6))
    assert not np.array_equal(g1.indices, g3.indices)


def test_clean_realigns_labels():
    spec = SBMSpec(block_sizes=(60, 60), p_in=0.15, p_out=0.01, seed=11)
    g, labels = generate_sbm(spec, clean=True, min_degree=3)
    assert len(labels) == g.node_count
    assert np.all(g.degrees >= 1)
    assert is_connected(g)
    for idx, node_id in enumerate(g.ids):
        assert labels[idx] == int(node_id) // 60


def test_subgraph_labels_by_id():
    g, labels = generate_sbm(SBMSpec(block_sizes=(10, 10), p_in=0.9, p_out=0.05, seed=2))
    relabeled = subgraph_labels(g, labels)
    assert np.array_equal(relabeled, labels)


def test_probs_for_mean_degree():
    p_in, p_out = probs_for_mean_degree(n_blocks=4, block_size=250, mean_degree=8.0, ratio=20.0)
    assert p_in == pytest.approx(20.0 * p_out)
    expected_degree = p_in * 249 + p_out * 750
    assert expected_degree == pytest.approx(8.0)
    g, _ = generate_sbm(SBMSpec(block_sizes=(250,) * 4, p_in=p_in, p_out=p_out, seed=3))
    realized = 2 * g.edge_count / g.node_count
    assert abs(realized - 8.0) < 0.8
    with pytest.raises(ValueError, match="> 1"):
        probs_for_mean_degree(n_blocks=2, block_size=4, mean_degree=30.0, ratio=50.0)


def test_run_benchmark_records():
    specs = [SBMSpec(block_sizes=(30, 30), p_in=0.3, p_out=0.05, seed=0)]
    methods = ("walk_estimate", "path_weight", "walk_exact")
    recs = run_benchmark(
        specs,
        methods=methods,
        replicates=2,
        workload_sources=10,
        walk_cfg=WalkConfig(steps=4, walkers=50, seed=0),
        seed=9,
    )
    assert len(recs) == len(methods) * 2
    for r in recs:
        assert not r.skipped
        assert r.seconds > 0
        assert r.nodes == 60
    # same top-level seed regenerates the same networks
    recs2 = run_benchmark(
        specs,
        methods=("walk_estimate",),
        replicates=2,
        workload_sources=10,
        walk_cfg=WalkConfig(steps=4, walkers=50, seed=0),
        seed=9,
    )
    assert [(r.nodes, r.edges) for r in recs2] == [
        (r.nodes, r.edges) for r in recs if r.method == "walk_estimate"
    ]


def test_benchmark_guard_skips_dense():
    specs = [SBMSpec(block_sizes=(40, 40), p_in=0.2, p_out=0.02, seed=0)]
    recs = run_benchmark(
        specs,
        methods=("walk_exact", "path_weight"),
        replicates=1,
        workload_sources=5,
        walk_cfg=WalkConfig(steps=3, walkers=20, seed=0),
        seed=1,
        dense_guard=50,
    )
    by_method = {r.method: r for r in recs}
    assert by_method["walk_exact"].skipped
    assert np.isnan(by_method["walk_exact"].seconds)
    assert not by_method["path_weight"].skipped


def test_summary_and_csv(tmp_path):
    recs = [
        BenchmarkRecord("walk_estimate", 100, 300, 0, 0.5),
        BenchmarkRecord("walk_estimate", 100, 310, 1, 0.7),
        BenchmarkRecord("walk_exact", 100, 300, 0, float("nan"), skipped=True),
    ]
    summary = summarize_benchmark(recs)
    rows = {(s["method"], s["nodes"]): s for s in summary}
    assert rows[("walk_estimate", 100)]["median_seconds"] == pytest.approx(0.6)
    assert rows[("walk_exact", 100)]["skipped"] == 1
    assert rows[("walk_exact", 100)]["median_seconds"] is None

    out = tmp_path / "bench.csv"
    write_benchmark_csv(out, recs)
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "method,nodes,edges,replicate,seconds,skipped"
    assert len(lines) == 4
    assert lines[3].endswith(",true")
    with pytest.raises(FileExistsError):
        write_benchmark_csv(out, recs)
