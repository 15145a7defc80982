"""Planted-block random graphs and the runtime benchmark harness.

Generation is O(edges): for each block pair the edge count is drawn from
the exact binomial distribution and that many distinct node pairs are then
picked uniformly, which together reproduce independent per-pair Bernoulli
sampling without touching all O(n^2) pairs.
"""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass, replace
from pathlib import Path
from statistics import median

import numpy as np

from .errors import GuardExceeded
from .exact import transition_matrix
from .graph import Graph, clean_pipeline, from_index_edges
from .measures import pair_values
from .scores import MEASURES
from .walks import WalkConfig

BENCH_DENSE_GUARD = 4000


@dataclass(frozen=True)
class SBMSpec:
    """Equal-probability planted-partition model: p_in within, p_out across."""

    block_sizes: tuple[int, ...]
    p_in: float
    p_out: float
    seed: int = 0
    assortative: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "block_sizes", tuple(int(s) for s in self.block_sizes))
        if not self.block_sizes or any(s < 1 for s in self.block_sizes):
            raise ValueError("block sizes must all be >= 1")
        for name, p in (("p_in", self.p_in), ("p_out", self.p_out)):
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {p}")
        if self.assortative and self.p_out > self.p_in:
            raise ValueError(
                f"p_out={self.p_out} > p_in={self.p_in}; pass assortative=False if intended"
            )

    @property
    def node_count(self) -> int:
        return sum(self.block_sizes)


def probs_for_mean_degree(
    n_blocks: int, block_size: int, mean_degree: float, ratio: float
) -> tuple[float, float]:
    """(p_in, p_out) hitting a target mean degree at a fixed p_in/p_out ratio."""
    if n_blocks < 1 or block_size < 1:
        raise ValueError("need at least one block of at least one node")
    if mean_degree <= 0 or ratio <= 0:
        raise ValueError("mean_degree and ratio must be positive")
    n = n_blocks * block_size
    p_out = mean_degree / (ratio * (block_size - 1) + (n - block_size))
    p_in = ratio * p_out
    if p_in > 1.0:
        raise ValueError(
            f"mean degree {mean_degree} at ratio {ratio} needs p_in={p_in:.3f} > 1"
        )
    return p_in, p_out


def _triu_decode(linear: np.ndarray, s: int) -> tuple[np.ndarray, np.ndarray]:
    """Row-major upper-triangle (i < j) pair for each linear index."""
    linear = linear.astype(np.float64)
    i = np.floor((2 * s - 1 - np.sqrt((2 * s - 1) ** 2 - 8 * linear)) / 2).astype(np.int64)
    # float sqrt can land one row off; nudge against the exact row offsets
    cum = lambda r: r * (s - 1) - r * (r - 1) // 2
    lin = linear.astype(np.int64)
    i = np.where(cum(i + 1) <= lin, i + 1, i)
    i = np.where(cum(i) > lin, i - 1, i)
    j = lin - cum(i) + i + 1
    return i, j


def _distinct_uniform(rng: np.random.Generator, n_pairs: int, count: int) -> np.ndarray:
    """Uniform random ``count``-subset of range(n_pairs), as a sorted-free array.

    Sparse draws use with-replacement sampling and keep first appearances,
    which is an unbiased subset; dense draws (>1/4 of all pairs) fall back
    to materialized sampling without replacement.
    """
    if count == 0:
        return np.empty(0, dtype=np.int64)
    if count * 4 >= n_pairs:
        return rng.choice(n_pairs, size=count, replace=False).astype(np.int64)
    draws: list[np.ndarray] = []
    have = 0
    while have < count:
        need = count - have
        draws.append(rng.integers(0, n_pairs, size=2 * need + 16))
        uniq, first = np.unique(np.concatenate(draws), return_index=True)
        have = len(uniq)
    order = np.argsort(first)
    return uniq[order][:count].astype(np.int64)


def generate_sbm(
    spec: SBMSpec, clean: bool = False, min_degree: int = 3
) -> tuple[Graph, np.ndarray]:
    """Sample a graph from the block model; returns (graph, block labels).

    Labels align with graph node indices, also after optional cleaning
    (degree filter + main component), which realigns them by node id.
    """
    sizes = np.asarray(spec.block_sizes, dtype=np.int64)
    offsets = np.concatenate([[0], np.cumsum(sizes)])
    n = int(offsets[-1])
    n_blocks = len(sizes)
    rng = np.random.default_rng(spec.seed)
    us: list[np.ndarray] = []
    vs: list[np.ndarray] = []
    for a in range(n_blocks):
        for b in range(a, n_blocks):
            p = spec.p_in if a == b else spec.p_out
            if p == 0.0:
                continue
            sa, sb = int(sizes[a]), int(sizes[b])
            if a == b:
                n_pairs = sa * (sa - 1) // 2
            else:
                n_pairs = sa * sb
            if n_pairs == 0:
                continue
            count = int(rng.binomial(n_pairs, p))
            linear = _distinct_uniform(rng, n_pairs, count)
            if a == b:
                i, j = _triu_decode(linear, sa)
                us.append(offsets[a] + i)
                vs.append(offsets[a] + j)
            else:
                us.append(offsets[a] + linear // sb)
                vs.append(offsets[b] + linear % sb)
    u = np.concatenate(us) if us else np.empty(0, dtype=np.int64)
    v = np.concatenate(vs) if vs else np.empty(0, dtype=np.int64)
    g = from_index_edges(n, u, v)
    labels = np.repeat(np.arange(n_blocks, dtype=np.int64), sizes)
    if clean:
        g = clean_pipeline(g, min_degree=min_degree)
        labels = subgraph_labels(g, labels)
    return g, labels


def subgraph_labels(g: Graph, full_labels: np.ndarray) -> np.ndarray:
    """Realign labels indexed by original node id to a cleaned subgraph."""
    return np.asarray([full_labels[int(node_id)] for node_id in g.ids], dtype=np.int64)


@dataclass(frozen=True)
class BenchmarkRecord:
    method: str
    nodes: int
    edges: int
    replicate: int
    seconds: float
    skipped: bool = False


def _time_method(
    g: Graph,
    method: str,
    pairs: np.ndarray,
    cfg: WalkConfig,
    dim: int,
    dense_guard: int,
) -> tuple[float, bool]:
    start = time.perf_counter()
    try:
        if method == "walk_exact":
            # the full dense matrix is the product being benchmarked
            full = transition_matrix(g, cfg.steps, max_nodes=dense_guard)
            _ = full[pairs[:, 0], pairs[:, 1]]
        else:
            pair_values(g, method, pairs, cfg, dim=dim, workers=1)
    except GuardExceeded:
        return float("nan"), True
    return time.perf_counter() - start, False


def run_benchmark(
    specs,
    methods=("walk_exact", "walk_estimate", "path_weight"),
    replicates: int = 10,
    workload_sources: int = 100,
    walk_cfg: WalkConfig | None = None,
    dim: int = 64,
    seed: int = 0,
    dense_guard: int = BENCH_DENSE_GUARD,
) -> list[BenchmarkRecord]:
    """Time each measure over a fixed per-network query workload.

    Per (spec, replicate): one generated network, one workload of
    ``workload_sources`` random (source, target) pairs, every method timed
    on that same workload.  A method refused by its size guard produces a
    skipped record rather than an error.  Everything derives from ``seed``.
    """
    for m in methods:
        if m not in MEASURES:
            raise ValueError(f"unknown method {m!r}; choose from {MEASURES}")
    if replicates < 1:
        raise ValueError("replicates must be >= 1")
    cfg = walk_cfg or WalkConfig()
    _warm_up(methods, cfg, dim)
    records: list[BenchmarkRecord] = []
    for spec_idx, spec in enumerate(specs):
        for rep in range(replicates):
            gseed = int(np.random.SeedSequence([seed, spec_idx, rep]).generate_state(1)[0])
            g, _ = generate_sbm(replace(spec, seed=gseed))
            wrng = np.random.default_rng([seed, spec_idx, rep, 1])
            k = min(workload_sources, g.node_count)
            sources = wrng.choice(g.node_count, size=k, replace=False)
            targets = wrng.integers(0, g.node_count, size=k)
            pairs = np.stack([sources, targets], axis=1).astype(np.int64)
            for method in methods:
                seconds, skipped = _time_method(g, method, pairs, cfg, dim, dense_guard)
                records.append(
                    BenchmarkRecord(
                        method=method,
                        nodes=g.node_count,
                        edges=g.edge_count,
                        replicate=rep,
                        seconds=seconds,
                        skipped=skipped,
                    )
                )
    return records


def _warm_up(methods, cfg: WalkConfig, dim: int) -> None:
    """One untimed run per method on a toy graph (JIT compilation, caches)."""
    spec = SBMSpec(block_sizes=(30, 30), p_in=0.3, p_out=0.05, seed=1)
    g, _ = generate_sbm(spec)
    pairs = np.array([[0, 1], [2, 40], [50, 9]], dtype=np.int64)
    for method in methods:
        _time_method(g, method, pairs, cfg, min(dim, 8), dense_guard=100)


def summarize_benchmark(records) -> list[dict]:
    """Median seconds per (method, nodes), with skip counts."""
    groups: dict[tuple[str, int], list[BenchmarkRecord]] = {}
    for rec in records:
        groups.setdefault((rec.method, rec.nodes), []).append(rec)
    out = []
    for (method, nodes), recs in sorted(groups.items()):
        timed = [r.seconds for r in recs if not r.skipped]
        out.append(
            {
                "method": method,
                "nodes": nodes,
                "edges_median": median(r.edges for r in recs),
                "replicates": len(recs),
                "skipped": sum(r.skipped for r in recs),
                "median_seconds": median(timed) if timed else None,
            }
        )
    return out


def write_benchmark_csv(path: str | Path, records, force: bool = False) -> None:
    p = Path(path)
    if p.exists() and not force:
        raise FileExistsError(f"{p} exists; pass force=True to overwrite")
    with open(p, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["method", "nodes", "edges", "replicate", "seconds", "skipped"])
        for r in records:
            writer.writerow(
                [
                    r.method,
                    r.nodes,
                    r.edges,
                    r.replicate,
                    "" if r.skipped else repr(r.seconds),
                    "true" if r.skipped else "false",
                ]
            )
