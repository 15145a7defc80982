"""Batch scoring front end: one entry point over all similarity measures.

Pairs arrive as external id pairs; results are PairScore rows in input
order.  Worker threads split the work by source node, which is safe
because every measure's randomness is keyed by (seed, source) alone, so
results never depend on the worker count or execution order.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .exact import DEFAULT_MAX_NODES, transition_pairs
from .graph import Graph
from .paths import path_length_pairs, path_probability_pairs
from .scores import MEASURES, PairScore
from .spectral import DENSE_CUTOFF, cosine_pairs, embed_transition
from .walks import WalkConfig, estimate_pairs

WORKERS_ENV = "CITEWALK_WORKERS"


def default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ValueError(f"{WORKERS_ENV} must be an integer, got {env!r}") from None
    return os.cpu_count() or 1


def resolve_pairs(g: Graph, id_pairs) -> np.ndarray:
    """Map external id pairs to an (n, 2) index array."""
    out = np.empty((len(id_pairs), 2), dtype=np.int64)
    missing = []
    for row, (a, b) in enumerate(id_pairs):
        ia = g.id_to_index.get(a)
        ib = g.id_to_index.get(b)
        if ia is None:
            missing.append(a)
        if ib is None:
            missing.append(b)
        if ia is not None and ib is not None:
            out[row, 0] = ia
            out[row, 1] = ib
    if missing:
        shown = ", ".join(sorted(set(missing))[:5])
        raise ValueError(f"{len(set(missing))} pair ids not in graph (e.g. {shown})")
    return out


def pair_values(
    g: Graph,
    measure: str,
    pairs: np.ndarray,
    walk_cfg: WalkConfig,
    dim: int = 64,
    workers: int = 1,
    dense_cutoff: int = DENSE_CUTOFF,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> np.ndarray:
    """Raw measure values for (source, target) index pairs."""
    if measure not in MEASURES:
        raise ValueError(f"unknown measure {measure!r}; choose from {MEASURES}")
    pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
    if measure == "spectral":
        emb = embed_transition(
            g, dim=dim, steps=walk_cfg.steps, dense_cutoff=dense_cutoff, max_nodes=max_nodes
        )
        return cosine_pairs(emb, pairs)
    per_source = {
        "walk_exact": lambda sub: transition_pairs(g, sub, walk_cfg.steps),
        "walk_estimate": lambda sub: estimate_pairs(g, sub, walk_cfg),
        "path_length": lambda sub: path_length_pairs(g, sub),
        "path_weight": lambda sub: path_probability_pairs(g, sub),
    }[measure]
    if workers <= 1 or len(pairs) == 0:
        return per_source(pairs)
    sources = np.unique(pairs[:, 0])
    buckets = [sources[i::workers] for i in range(min(workers, len(sources)))]
    out = np.empty(len(pairs), dtype=np.float64)

    def run(bucket: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        sel = np.flatnonzero(np.isin(pairs[:, 0], bucket))
        return sel, per_source(pairs[sel])

    with ThreadPoolExecutor(max_workers=len(buckets)) as pool:
        for sel, vals in pool.map(run, buckets):
            out[sel] = vals
    return out


def score_pairs(
    g: Graph,
    measure: str,
    id_pairs,
    walk_cfg: WalkConfig | None = None,
    dim: int = 64,
    workers: int = 1,
    dense_cutoff: int = DENSE_CUTOFF,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> list[PairScore]:
    """Score external-id pairs and wrap the results as PairScore rows."""
    cfg = walk_cfg or WalkConfig()
    pairs = resolve_pairs(g, id_pairs)
    values = pair_values(
        g, measure, pairs, cfg, dim=dim, workers=workers,
        dense_cutoff=dense_cutoff, max_nodes=max_nodes,
    )
    steps = 0 if measure in ("path_length", "path_weight") else cfg.steps
    return [
        PairScore(
            source_id=a,
            target_id=b,
            measure=measure,
            walk_length=steps,
            value=float(v),
            is_zero_estimate=bool(measure == "walk_estimate" and v == 0.0),
        )
        for (a, b), v in zip(id_pairs, values)
    ]


def similarity_values(measure: str, values: np.ndarray) -> np.ndarray:
    """Orient raw values so larger always means more similar.

    Path length is a dissimilarity, so it is negated; everything else is
    already similarity-oriented.
    """
    values = np.asarray(values, dtype=np.float64)
    if measure == "path_length":
        return -values
    return values
