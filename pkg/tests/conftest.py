"""Shared graph factories for the test suite."""

from __future__ import annotations

import numpy as np
import pytest

from citewalk.graph import Graph, build_graph, from_index_edges


def graph_from_edges(edges) -> Graph:
    """Graph over string ids '0'..'n-1' from integer edge pairs."""
    return build_graph([(str(a), str(b)) for a, b in edges])


def path_graph(n: int) -> Graph:
    return graph_from_edges([(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return graph_from_edges([(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return graph_from_edges([(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    return graph_from_edges([(0, i) for i in range(1, leaves + 1)])


def random_connected_graph(rng: np.random.Generator, n: int, extra_edges: int) -> Graph:
    """Random tree plus ``extra_edges`` uniform extra pairs; always connected."""
    edges = [(int(rng.integers(0, i)), i) for i in range(1, n)]
    for _ in range(extra_edges):
        u, v = rng.integers(0, n, size=2)
        if u != v:
            edges.append((int(u), int(v)))
    return graph_from_edges(edges)


def gnp_graph(rng: np.random.Generator, n: int, p: float) -> Graph:
    """Erdos-Renyi graph; may be disconnected and have isolated nodes."""
    upper = np.triu_indices(n, k=1)
    mask = rng.random(len(upper[0])) < p
    u = upper[0][mask].astype(np.int64)
    v = upper[1][mask].astype(np.int64)
    return from_index_edges(n, u, v, tuple(str(i) for i in range(n)))


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20260816)
