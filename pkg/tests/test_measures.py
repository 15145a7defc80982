from __future__ import annotations

import numpy as np
import pytest

from citewalk.exact import transition_matrix
from citewalk.measures import (
    pair_values,
    resolve_pairs,
    score_pairs,
    similarity_values,
)
from citewalk.spectral import cosine_similarity, embed_transition
from citewalk.walks import WalkConfig

from conftest import complete_graph, random_connected_graph


def test_resolve_pairs_reports_missing_ids():
    g = complete_graph(3)
    with pytest.raises(ValueError, match="zz"):
        resolve_pairs(g, [("0", "1"), ("zz", "1")])
    idx = resolve_pairs(g, [("0", "2")])
    assert idx.tolist() == [[g.index_of("0"), g.index_of("2")]]


def test_score_pairs_walk_exact_triangle():
    g = complete_graph(3)
    rows = score_pairs(g, "walk_exact", [("0", "1"), ("1", "2"), ("0", "2")], WalkConfig(steps=2))
    for r in rows:
        assert r.value == pytest.approx(3.0 / 16.0, abs=1e-15)
        assert r.measure == "walk_exact"
        assert r.walk_length == 2
        assert not r.is_zero_estimate


def test_score_pairs_orders_and_flags(rng):
    g = random_connected_graph(rng, 15, extra_edges=10)
    ids = [("0", "7"), ("3", "1"), ("0", "2")]
    rows = score_pairs(g, "walk_estimate", ids, WalkConfig(steps=3, walkers=20, seed=5))
    assert [(r.source_id, r.target_id) for r in rows] == ids
    for r in rows:
        assert r.is_zero_estimate == (r.value == 0.0)

    path_rows = score_pairs(g, "path_length", ids)
    assert all(r.walk_length == 0 for r in path_rows)


def test_unknown_measure():
    g = complete_graph(3)
    with pytest.raises(ValueError, match="unknown measure"):
        score_pairs(g, "banana", [("0", "1")])


def test_workers_do_not_change_results(rng):
    g = random_connected_graph(rng, 60, extra_edges=90)
    pairs = np.array([(s, t) for s in range(0, 60, 7) for t in range(1, 60, 11)])
    cfg = WalkConfig(steps=6, walkers=150, seed=2)
    for measure in ("walk_exact", "walk_estimate", "path_length", "path_weight"):
        solo = pair_values(g, measure, pairs, cfg, workers=1)
        multi = pair_values(g, measure, pairs, cfg, workers=4)
        assert np.array_equal(solo, multi), measure


def test_spectral_dispatch_matches_direct_call(rng):
    g = random_connected_graph(rng, 25, extra_edges=30)
    cfg = WalkConfig(steps=5)
    vals = pair_values(g, "spectral", np.array([[0, 3], [2, 2]]), cfg, dim=4)
    emb = embed_transition(g, dim=4, steps=5)
    assert vals[0] == cosine_similarity(emb, 0, 3)
    assert vals[1] == 1.0
    rows = score_pairs(g, "spectral", [("0", "3")], cfg, dim=4)
    assert rows[0].walk_length == 5


def test_similarity_orientation(rng):
    g = random_connected_graph(rng, 10, extra_edges=8)
    vals = np.array([1.0, 3.0, np.inf])
    out = similarity_values("path_length", vals)
    assert out.tolist() == [-1.0, -3.0, -np.inf]
    same = similarity_values("walk_exact", vals)
    assert same.tolist() == vals.tolist()
    T = transition_matrix(g, 4)
    assert T.max() <= 1.0
