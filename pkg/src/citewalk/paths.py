"""Shortest-path metrics: plain hop distance and the degree-weighted variant.

The degree-weighted value for a pair (i, j) averages, over every shortest
path between them, the product of degree reciprocals of all nodes on the
path, endpoints included.  Both the path count and the probability sum
satisfy a DAG recurrence over the BFS level structure, so one BFS per
source covers all targets.

Path counts are tracked in float64, which is exact below 2**53 paths; a
source whose counts grow past that is recomputed in log space.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .graph import Graph

EXACT_COUNT_LIMIT = 2.0**53


@njit(cache=True, nogil=True)
def _bfs_dag_dp(indptr, indices, inv_deg, source):
    n = len(indptr) - 1
    dist = np.full(n, -1, dtype=np.int64)
    count = np.zeros(n, dtype=np.float64)
    prob = np.zeros(n, dtype=np.float64)
    queue = np.empty(n, dtype=np.int64)
    dist[source] = 0
    count[source] = 1.0
    prob[source] = inv_deg[source]
    queue[0] = source
    head, tail = 0, 1
    while head < tail:
        u = queue[head]
        head += 1
        for p in range(indptr[u], indptr[u + 1]):
            v = indices[p]
            if dist[v] == -1:
                dist[v] = dist[u] + 1
                queue[tail] = v
                tail += 1
            if dist[v] == dist[u] + 1:
                count[v] += count[u]
                prob[v] += prob[u] * inv_deg[v]
    return dist, count, prob


def _log_space_dp(g: Graph, dist: np.ndarray, source: int) -> np.ndarray:
    """Same recurrence with log-sum-exp accumulators; immune to overflow."""
    n = g.node_count
    log_inv = np.where(g.degrees > 0, -np.log(np.maximum(g.degrees, 1)), 0.0)
    log_count = np.full(n, -np.inf)
    log_prob = np.full(n, -np.inf)
    log_count[source] = 0.0
    log_prob[source] = log_inv[source]
    reachable = np.flatnonzero(dist >= 0)
    order = reachable[np.argsort(dist[reachable], kind="stable")]
    for u in order:
        for v in g.neighbors(u):
            if dist[v] == dist[u] + 1:
                log_count[v] = np.logaddexp(log_count[v], log_count[u])
                log_prob[v] = np.logaddexp(log_prob[v], log_prob[u] + log_inv[v])
    out = np.zeros(n, dtype=np.float64)
    out[reachable] = np.exp(log_prob[reachable] - log_count[reachable])
    return out


def shortest_path_lengths(g: Graph, source: int) -> np.ndarray:
    """BFS hop distances from ``source``; -1 marks unreachable nodes."""
    if not 0 <= source < g.node_count:
        raise ValueError(f"source {source} out of range for {g.node_count} nodes")
    inv_deg = np.zeros(g.node_count, dtype=np.float64)
    nz = g.degrees > 0
    inv_deg[nz] = 1.0 / g.degrees[nz]
    dist, _, _ = _bfs_dag_dp(g.indptr, g.indices, inv_deg, np.int64(source))
    return dist


def path_probability_row(g: Graph, source: int) -> np.ndarray:
    """Degree-weighted shortest-path values from ``source`` to every node.

    Unreachable targets get 0.0, which is also the limit of the measure.
    """
    if not 0 <= source < g.node_count:
        raise ValueError(f"source {source} out of range for {g.node_count} nodes")
    inv_deg = np.zeros(g.node_count, dtype=np.float64)
    nz = g.degrees > 0
    inv_deg[nz] = 1.0 / g.degrees[nz]
    dist, count, prob = _bfs_dag_dp(g.indptr, g.indices, inv_deg, np.int64(source))
    if count.max() > EXACT_COUNT_LIMIT:
        return _log_space_dp(g, dist, source)
    out = np.zeros(g.node_count, dtype=np.float64)
    hit = count > 0
    out[hit] = prob[hit] / count[hit]
    return out


def path_length_pairs(g: Graph, pairs) -> np.ndarray:
    """Hop distances for (source, target) pairs; inf when unreachable."""
    pairs = np.asarray(pairs, dtype=np.int64)
    if pairs.size == 0:
        return np.empty(0, dtype=np.float64)
    out = np.empty(len(pairs), dtype=np.float64)
    for src in np.unique(pairs[:, 0]):
        dist = shortest_path_lengths(g, int(src))
        sel = pairs[:, 0] == src
        d = dist[pairs[sel, 1]].astype(np.float64)
        d[d < 0] = np.inf
        out[sel] = d
    return out


def path_probability_pairs(g: Graph, pairs) -> np.ndarray:
    """Degree-weighted shortest-path values for (source, target) pairs."""
    pairs = np.asarray(pairs, dtype=np.int64)
    if pairs.size == 0:
        return np.empty(0, dtype=np.float64)
    out = np.empty(len(pairs), dtype=np.float64)
    for src in np.unique(pairs[:, 0]):
        row = path_probability_row(g, int(src))
        sel = pairs[:, 0] == src
        out[sel] = row[pairs[sel, 1]]
    return out
