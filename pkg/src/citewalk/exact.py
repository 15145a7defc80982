"""Exact walk transition probabilities.

For an undirected graph with adjacency A and degree matrix D, the walk
matrix is the average over walk lengths 1..steps of D^-1 A applied that
many times, with a final right scaling by D^-1.  The result is symmetric,
entries lie in [0, 1], and each row satisfies sum_j T_ij * k_j = 1 for
every node of positive degree.
"""

from __future__ import annotations

import numpy as np
from scipy import sparse

from .errors import GuardExceeded
from .graph import Graph

# full-matrix work is O(steps * edges * nodes) time and O(nodes^2) memory
DEFAULT_MAX_NODES = 20_000


def adjacency_matrix(g: Graph) -> sparse.csr_matrix:
    """Unweighted adjacency as a scipy CSR matrix (shares index arrays)."""
    n = g.node_count
    data = np.ones(len(g.indices), dtype=np.float64)
    return sparse.csr_matrix((data, g.indices, g.indptr), shape=(n, n))


def _inverse_degrees(g: Graph) -> np.ndarray:
    inv = np.zeros(g.node_count, dtype=np.float64)
    nz = g.degrees > 0
    inv[nz] = 1.0 / g.degrees[nz]
    return inv


def transition_matrix(g: Graph, steps: int, max_nodes: int = DEFAULT_MAX_NODES) -> np.ndarray:
    """Dense (n, n) walk-probability matrix for the given number of steps.

    Raises GuardExceeded when the graph has more than ``max_nodes`` nodes;
    use :func:`transition_row` per source instead of raising the limit.
    """
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    n = g.node_count
    if n > max_nodes:
        raise GuardExceeded(
            f"dense transition matrix for {n} nodes exceeds the {max_nodes}-node guard"
        )
    A = adjacency_matrix(g)
    inv_k = _inverse_degrees(g)
    occupancy = np.eye(n, dtype=np.float64)
    acc = np.zeros((n, n), dtype=np.float64)
    for _ in range(steps):
        occupancy = (A @ occupancy) * inv_k[:, None]
        acc += occupancy
    return acc * inv_k[None, :] / steps


def transition_row(g: Graph, source: int, steps: int) -> np.ndarray:
    """Single row of the walk-probability matrix in O(steps * edges) time."""
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    n = g.node_count
    if not 0 <= source < n:
        raise ValueError(f"source {source} out of range for {n} nodes")
    A = adjacency_matrix(g)
    inv_k = _inverse_degrees(g)
    occupancy = np.zeros(n, dtype=np.float64)
    occupancy[source] = 1.0
    acc = np.zeros(n, dtype=np.float64)
    for _ in range(steps):
        occupancy = A @ (occupancy * inv_k)
        acc += occupancy
    return acc * inv_k / steps


def transition_pairs(g: Graph, pairs, steps: int) -> np.ndarray:
    """Walk probabilities for (source, target) index pairs, row by row."""
    pairs = np.asarray(pairs, dtype=np.int64)
    if pairs.size == 0:
        return np.empty(0, dtype=np.float64)
    out = np.empty(len(pairs), dtype=np.float64)
    for src in np.unique(pairs[:, 0]):
        row = transition_row(g, int(src), steps)
        sel = pairs[:, 0] == src
        out[sel] = row[pairs[sel, 1]]
    return out
