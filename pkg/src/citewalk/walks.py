"""Monte-Carlo estimation of walk transition probabilities.

Walkers start at a source node and take a fixed number of uniform-neighbor
steps.  The estimate for a target j is its total visit count over steps
1..steps (the start position is not a visit), divided by
walkers * steps * degree(j).  Estimates are unbiased for the exact values
but not symmetric in source and target.

Randomness is keyed by (seed, source) only, so results do not depend on
the order sources are processed in, or on which other sources are run.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph


@dataclass(frozen=True)
class WalkConfig:
    steps: int = 10
    walkers: int = 1000
    seed: int = 0

    def __post_init__(self) -> None:
        if self.steps < 1:
            raise ValueError(f"steps must be >= 1, got {self.steps}")
        if self.walkers < 1:
            raise ValueError(f"walkers must be >= 1, got {self.walkers}")


@dataclass(frozen=True)
class VisitCounts:
    """Sparse visit tally for one source: counts[i] visits to nodes[i]."""

    source: int
    steps: int
    walkers: int
    nodes: np.ndarray
    counts: np.ndarray


def sample_visits(g: Graph, source: int, cfg: WalkConfig) -> VisitCounts:
    """Run all walkers from ``source`` in lockstep and tally visits."""
    n = g.node_count
    if not 0 <= source < n:
        raise ValueError(f"source {source} out of range for {n} nodes")
    empty = VisitCounts(
        source=source,
        steps=cfg.steps,
        walkers=cfg.walkers,
        nodes=np.empty(0, dtype=np.int64),
        counts=np.empty(0, dtype=np.int64),
    )
    if g.degrees[source] == 0:
        return empty
    rng = np.random.default_rng([cfg.seed, source])
    # row w is walker w's private stream; draws come column by column
    draws = rng.random((cfg.walkers, cfg.steps))
    pos = np.full(cfg.walkers, source, dtype=np.int64)
    visited = np.empty((cfg.steps, cfg.walkers), dtype=np.int64)
    for step in range(cfg.steps):
        hop = (draws[:, step] * g.degrees[pos]).astype(np.int64)
        pos = g.indices[g.indptr[pos] + hop]
        visited[step] = pos
    nodes, counts = np.unique(visited.ravel(), return_counts=True)
    return VisitCounts(
        source=source,
        steps=cfg.steps,
        walkers=cfg.walkers,
        nodes=nodes,
        counts=counts.astype(np.int64),
    )


def estimate_from_counts(visits: VisitCounts, degrees: np.ndarray, n: int) -> np.ndarray:
    """Dense estimated-probability row from a visit tally."""
    row = np.zeros(n, dtype=np.float64)
    if visits.nodes.size:
        denom = visits.walkers * visits.steps * degrees[visits.nodes]
        row[visits.nodes] = visits.counts / denom
    return row


def estimate_row(g: Graph, source: int, cfg: WalkConfig) -> np.ndarray:
    """Estimated walk-probability row for one source."""
    return estimate_from_counts(sample_visits(g, source, cfg), g.degrees, g.node_count)


def estimate_pairs(g: Graph, pairs, cfg: WalkConfig) -> np.ndarray:
    """Estimates for (source, target) index pairs; zeros are real records.

    A value of exactly 0.0 means no walker from the source ever visited
    the target, which is itself informative at short walk lengths.
    """
    pairs = np.asarray(pairs, dtype=np.int64)
    if pairs.size == 0:
        return np.empty(0, dtype=np.float64)
    out = np.zeros(len(pairs), dtype=np.float64)
    for src in np.unique(pairs[:, 0]):
        visits = sample_visits(g, int(src), cfg)
        if visits.nodes.size == 0:
            continue
        sel = np.flatnonzero(pairs[:, 0] == src)
        targets = pairs[sel, 1]
        slot = np.searchsorted(visits.nodes, targets).clip(max=visits.nodes.size - 1)
        ok = visits.nodes[slot] == targets
        hit = sel[ok]
        if hit.size:
            t_idx = slot[ok]
            out[hit] = visits.counts[t_idx] / (
                cfg.walkers * cfg.steps * g.degrees[visits.nodes[t_idx]]
            )
    return out


def zero_fraction(values: np.ndarray) -> float:
    """Fraction of estimates that are exact zeros (no visit recorded)."""
    values = np.asarray(values, dtype=np.float64)
    if values.size == 0:
        return 0.0
    return float(np.mean(values == 0.0))
