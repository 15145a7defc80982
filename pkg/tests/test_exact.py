from __future__ import annotations

import numpy as np
import pytest

from citewalk.errors import GuardExceeded
from citewalk.exact import transition_matrix, transition_pairs, transition_row

from conftest import (
    complete_graph,
    graph_from_edges,
    path_graph,
    random_connected_graph,
)
from oracles import enumerate_walk_row


def test_hand_worked_values():
    k2 = complete_graph(2)
    assert transition_matrix(k2, 1)[0, 1] == pytest.approx(1.0, abs=1e-15)
    assert transition_matrix(k2, 2)[0, 1] == pytest.approx(0.5, abs=1e-15)

    k3 = complete_graph(3)
    assert transition_matrix(k3, 2)[0, 1] == pytest.approx(3.0 / 16.0, abs=1e-15)

    p3 = path_graph(3)
    i0, i2 = p3.index_of("0"), p3.index_of("2")
    assert transition_matrix(p3, 2)[i0, i2] == pytest.approx(0.25, abs=1e-15)


@pytest.mark.parametrize("seed", range(8))
def test_matches_enumeration_oracle(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(4, 11))
    g = random_connected_graph(rng, n, extra_edges=int(rng.integers(0, n)))
    steps = int(rng.integers(1, 6))
    T = transition_matrix(g, steps)
    for src in range(g.node_count):
        expected = enumerate_walk_row(g, src, steps)
        np.testing.assert_allclose(T[src], expected, atol=1e-12, rtol=0)


@pytest.mark.parametrize("seed", range(4))
def test_symmetry_bounds_normalization(seed):
    rng = np.random.default_rng(100 + seed)
    g = random_connected_graph(rng, 80, extra_edges=120)
    T = transition_matrix(g, 10)
    assert np.max(np.abs(T - T.T)) < 1e-12
    assert T.min() >= 0.0
    assert T.max() <= 1.0 + 1e-12
    row_mass = T @ g.degrees.astype(float)
    np.testing.assert_allclose(row_mass, 1.0, atol=1e-10, rtol=0)


def test_row_matches_matrix(rng):
    g = random_connected_graph(rng, 30, extra_edges=40)
    T = transition_matrix(g, 7)
    for src in (0, 11, 29):
        np.testing.assert_allclose(transition_row(g, src, 7), T[src], atol=1e-14, rtol=0)


def test_pairs_gather(rng):
    g = random_connected_graph(rng, 25, extra_edges=30)
    T = transition_matrix(g, 5)
    pairs = [(0, 3), (7, 7), (0, 24), (12, 1)]
    vals = transition_pairs(g, pairs, 5)
    assert vals.tolist() == [transition_row(g, a, 5)[b] for a, b in pairs]
    np.testing.assert_allclose(vals, [T[a, b] for a, b in pairs], atol=1e-14, rtol=0)
    assert transition_pairs(g, [], 5).size == 0


def test_single_step_terms_approach_stationary_level():
    # t*T_t - (t-1)*T_{t-1} is the length-t term alone; on a connected
    # non-bipartite graph it converges to 1/(2m) everywhere
    g = graph_from_edges([(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 2)])
    m = g.edge_count
    t = 400
    term = t * transition_matrix(g, t) - (t - 1) * transition_matrix(g, t - 1)
    np.testing.assert_allclose(term, 1.0 / (2 * m), atol=1e-9, rtol=0)


def test_isolated_node_rows_are_zero():
    g = graph_from_edges([(0, 1), (1, 2)])
    # add an isolated node by filtering a second component down
    gi = graph_from_edges([(0, 1), (1, 2), (3, 4)])
    T = transition_matrix(gi, 3)
    # nodes 3,4 form their own component; walk never crosses
    i3 = gi.index_of("3")
    for j in (gi.index_of("0"), gi.index_of("1"), gi.index_of("2")):
        assert T[i3, j] == 0.0
    # normalization holds within each positive-degree component
    row_mass = T @ gi.degrees.astype(float)
    np.testing.assert_allclose(row_mass, 1.0, atol=1e-12)
    del g


def test_bad_arguments(rng):
    g = random_connected_graph(rng, 12, extra_edges=4)
    with pytest.raises(ValueError):
        transition_matrix(g, 0)
    with pytest.raises(ValueError):
        transition_row(g, 99, 3)
    with pytest.raises(GuardExceeded):
        transition_matrix(g, 3, max_nodes=10)
