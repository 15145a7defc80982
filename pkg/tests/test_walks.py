from __future__ import annotations

import numpy as np
import pytest

from citewalk.exact import transition_matrix
from citewalk.walks import (
    WalkConfig,
    estimate_pairs,
    estimate_row,
    sample_visits,
    zero_fraction,
)

from conftest import complete_graph, graph_from_edges, random_connected_graph


def test_config_validation():
    with pytest.raises(ValueError):
        WalkConfig(steps=0)
    with pytest.raises(ValueError):
        WalkConfig(walkers=0)


def test_counts_bookkeeping():
    g = complete_graph(4)
    cfg = WalkConfig(steps=5, walkers=200, seed=3)
    visits = sample_visits(g, 0, cfg)
    # every step lands somewhere, start position not counted
    assert visits.counts.sum() == cfg.walkers * cfg.steps
    assert np.all(np.diff(visits.nodes) > 0)


def test_deterministic_and_schedule_independent():
    rng = np.random.default_rng(7)
    g = random_connected_graph(rng, 40, extra_edges=60)
    cfg = WalkConfig(steps=10, walkers=300, seed=42)
    row_alone = estimate_row(g, 5, cfg)
    # interleave other sources, then recompute
    for other in (0, 17, 31):
        estimate_row(g, other, cfg)
    row_again = estimate_row(g, 5, cfg)
    assert np.array_equal(row_alone, row_again)
    # a different seed moves the estimates
    assert not np.array_equal(row_alone, estimate_row(g, 5, WalkConfig(10, 300, seed=43)))


def test_k2_estimate_is_exact():
    # one neighbor: every walker visits node 1 at every odd step, node 0
    # at every even step, so counts are deterministic
    g = complete_graph(2)
    row = estimate_row(g, 0, WalkConfig(steps=2, walkers=50, seed=0))
    assert row[1] == pytest.approx(0.5, abs=0)
    assert row[0] == pytest.approx(0.5, abs=0)


def test_estimates_unbiased_on_small_graph():
    rng = np.random.default_rng(11)
    g = random_connected_graph(rng, 12, extra_edges=10)
    steps = 4
    T = transition_matrix(g, steps)
    source = 0
    reps = 200
    rows = np.stack(
        [estimate_row(g, source, WalkConfig(steps, walkers=400, seed=s)) for s in range(reps)]
    )
    mean = rows.mean(axis=0)
    se = rows.std(axis=0, ddof=1) / np.sqrt(reps)
    reachable = T[source] > 0
    inside = np.abs(mean[reachable] - T[source][reachable]) <= 4 * se[reachable] + 1e-15
    assert inside.mean() >= 0.90


def test_pairs_match_rows():
    rng = np.random.default_rng(5)
    g = random_connected_graph(rng, 30, extra_edges=45)
    cfg = WalkConfig(steps=8, walkers=250, seed=9)
    pairs = [(0, 4), (0, 29), (13, 2), (13, 13), (28, 0)]
    vals = estimate_pairs(g, pairs, cfg)
    for (src, dst), v in zip(pairs, vals):
        assert v == estimate_row(g, src, cfg)[dst]
    assert estimate_pairs(g, [], cfg).size == 0


def test_zero_estimates_are_recorded():
    # two far ends of a long path at a short walk length: never reached
    g = graph_from_edges([(i, i + 1) for i in range(9)])
    src, dst = g.index_of("0"), g.index_of("9")
    vals = estimate_pairs(g, [(src, dst)], WalkConfig(steps=3, walkers=100, seed=1))
    assert vals[0] == 0.0
    assert zero_fraction(vals) == 1.0
    assert zero_fraction(np.array([0.0, 0.5, 1.0, 0.0])) == 0.5
    assert zero_fraction(np.array([])) == 0.0


def test_degree_zero_source():
    g = graph_from_edges([(0, 1), (2, 3)])
    gi = graph_from_edges([(0, 1)])
    assert gi.node_count == 2
    # isolated node comes from building with an id that loses all edges
    from citewalk.graph import from_index_edges

    g3 = from_index_edges(3, np.array([0]), np.array([1]))
    visits = sample_visits(g3, 2, WalkConfig(steps=4, walkers=10, seed=0))
    assert visits.nodes.size == 0
    assert estimate_row(g3, 2, WalkConfig(steps=4, walkers=10, seed=0)).sum() == 0.0
    del g
