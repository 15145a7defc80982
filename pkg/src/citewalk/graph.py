"""Undirected citation-network container and the cleaning pipeline.

The graph is stored in compressed sparse row form (``indptr``/``indices``)
with sorted neighbor lists. External node ids are opaque strings; every
algorithm downstream works on dense integer indices.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

import numpy as np

from .errors import ParseError

logger = logging.getLogger(__name__)

SNAPSHOT_VERSION = 1


@dataclass(frozen=True, eq=False)
class EdgeList:
    """Raw edge records as read from disk; direction is discarded at build."""

    records: list[tuple[str, str]]
    skipped: list[tuple[int, str]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.records)


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable undirected simple graph in CSR adjacency form.

    ``indices[indptr[i]:indptr[i+1]]`` are the sorted neighbors of node
    ``i``.  No self-loops, no duplicate edges; ``j in adj(i)`` iff
    ``i in adj(j)``.  Safe to share across threads once built.
    """

    indptr: np.ndarray
    indices: np.ndarray
    degrees: np.ndarray
    ids: tuple[str, ...]
    id_to_index: dict[str, int]

    @property
    def node_count(self) -> int:
        return len(self.indptr) - 1

    @property
    def edge_count(self) -> int:
        return len(self.indices) // 2

    def neighbors(self, i: int) -> np.ndarray:
        return self.indices[self.indptr[i] : self.indptr[i + 1]]

    def index_of(self, external_id: str) -> int:
        return self.id_to_index[external_id]

    def __repr__(self) -> str:
        return f"Graph(nodes={self.node_count}, edges={self.edge_count})"


def load_edge_list(
    path: str | Path,
    delimiter: str | None = None,
    on_malformed: str = "error",
) -> EdgeList:
    """Read a delimited edge-list file, one edge per line.

    Lines starting with '#' and blank lines are ignored.  The delimiter is
    auto-detected (tab, then comma, then any whitespace) unless given.
    ``on_malformed`` is either "error" or "skip"; skipped lines are kept in
    ``EdgeList.skipped`` with their 1-based line numbers and logged.
    """
    if on_malformed not in ("error", "skip"):
        raise ValueError(f"on_malformed must be 'error' or 'skip', got {on_malformed!r}")
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read edge list {p}: {exc}") from exc

    records: list[tuple[str, str]] = []
    skipped: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if delimiter is None:
            delimiter = _detect_delimiter(line)
        fields = line.split(delimiter) if delimiter is not None else line.split()
        fields = [f.strip() for f in fields if f.strip()]
        if len(fields) < 2:
            if on_malformed == "error":
                raise ParseError(f"{p}:{lineno}: expected at least 2 fields, got {raw!r}")
            logger.warning("%s:%d: skipping malformed line %r", p, lineno, raw)
            skipped.append((lineno, raw))
            continue
        records.append((fields[0], fields[1]))
    return EdgeList(records=records, skipped=skipped)


def _detect_delimiter(line: str) -> str | None:
    if "\t" in line:
        return "\t"
    if "," in line:
        return ","
    return None  # any whitespace


def build_graph(edges: EdgeList | Iterable[tuple[str, str]]) -> Graph:
    """Build an undirected simple graph, dropping self-loops and duplicates.

    External ids are mapped to dense indices in lexicographic order, so any
    permutation of the input records yields an identical graph.
    """
    records = edges.records if isinstance(edges, EdgeList) else list(edges)
    ids = sorted({node for rec in records for node in rec})
    id_to_index = {node: i for i, node in enumerate(ids)}
    n = len(ids)
    if records:
        u = np.fromiter((id_to_index[a] for a, b in records), dtype=np.int64, count=len(records))
        v = np.fromiter((id_to_index[b] for a, b in records), dtype=np.int64, count=len(records))
    else:
        u = np.empty(0, dtype=np.int64)
        v = np.empty(0, dtype=np.int64)
    return from_index_edges(n, u, v, tuple(ids))


def from_index_edges(n: int, u: np.ndarray, v: np.ndarray, ids: tuple[str, ...] | None = None) -> Graph:
    """Build a graph from integer endpoint arrays (generator fast path)."""
    if ids is None:
        ids = tuple(str(i) for i in range(n))
    u = np.asarray(u, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64)
    keep = u != v
    lo = np.minimum(u[keep], v[keep])
    hi = np.maximum(u[keep], v[keep])
    if lo.size:
        # unordered-pair key; n**2 must stay below 2**63
        uniq = np.unique(lo * np.int64(n) + hi)
        lo, hi = uniq // n, uniq % n
    src = np.concatenate([lo, hi])
    dst = np.concatenate([hi, lo])
    order = np.lexsort((dst, src))
    src, dst = src[order], dst[order]
    degrees = np.bincount(src, minlength=n).astype(np.int64)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(degrees, out=indptr[1:])
    return Graph(
        indptr=indptr,
        indices=dst,
        degrees=degrees,
        ids=ids,
        id_to_index={node: i for i, node in enumerate(ids)},
    )


def _induced_subgraph(g: Graph, keep: np.ndarray) -> Graph:
    """Subgraph on the (sorted, unique) node indices in ``keep``."""
    n = g.node_count
    mask = np.zeros(n, dtype=bool)
    mask[keep] = True
    remap = np.full(n, -1, dtype=np.int64)
    remap[keep] = np.arange(len(keep), dtype=np.int64)
    src_all = np.repeat(np.arange(n, dtype=np.int64), g.degrees)
    sel = mask[src_all] & mask[g.indices]
    src = remap[src_all[sel]]
    dst = remap[g.indices[sel]]
    # already sorted: remap is monotone over the sorted original order
    m = len(keep)
    degrees = np.bincount(src, minlength=m).astype(np.int64)
    indptr = np.zeros(m + 1, dtype=np.int64)
    np.cumsum(degrees, out=indptr[1:])
    ids = tuple(g.ids[i] for i in keep)
    return Graph(
        indptr=indptr,
        indices=dst,
        degrees=degrees,
        ids=ids,
        id_to_index={node: i for i, node in enumerate(ids)},
    )


def filter_min_degree(g: Graph, min_deg: int, iterate: bool = False) -> Graph:
    """Remove all nodes whose degree is below ``min_deg``.

    Single pass by default: surviving nodes may fall below ``min_deg`` once
    their neighbors are gone.  ``iterate=True`` repeats to a proper k-core.
    """
    if min_deg < 0:
        raise ValueError("min_deg must be >= 0")
    out = g
    while True:
        keep = np.flatnonzero(out.degrees >= min_deg)
        if len(keep) == out.node_count:
            return out
        out = _induced_subgraph(out, keep)
        if not iterate:
            return out


def connected_components(g: Graph) -> np.ndarray:
    """Component label per node; labels increase with the smallest contained index."""
    n = g.node_count
    comp = np.full(n, -1, dtype=np.int64)
    current = 0
    for start in range(n):
        if comp[start] != -1:
            continue
        comp[start] = current
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if comp[v] == -1:
                    comp[v] = current
                    queue.append(v)
        current += 1
    return comp


def largest_component(g: Graph) -> Graph:
    """The connected component with the most nodes.

    Ties go to the component containing the smallest internal index.
    """
    if g.node_count == 0:
        return g
    comp = connected_components(g)
    sizes = np.bincount(comp)
    winner = int(np.argmax(sizes))  # first max = smallest contained index
    keep = np.flatnonzero(comp == winner)
    if len(keep) == g.node_count:
        return g
    return _induced_subgraph(g, keep)


def is_connected(g: Graph) -> bool:
    if g.node_count == 0:
        return True
    return bool(np.all(connected_components(g) == 0))


def clean_pipeline(g: Graph, min_degree: int = 3, iterate: bool = False) -> Graph:
    """Degree filter followed by main-component selection, in that order."""
    return largest_component(filter_min_degree(g, min_degree, iterate=iterate))


def save_graph(g: Graph, path: str | Path) -> None:
    """Persist a graph snapshot; round-trips bit-exactly through load_graph."""
    np.savez(
        Path(path),
        version=np.int64(SNAPSHOT_VERSION),
        ids=np.array(g.ids, dtype="U"),
        indptr=g.indptr,
        indices=g.indices,
    )


def load_graph(path: str | Path) -> Graph:
    with np.load(Path(path), allow_pickle=False) as data:
        if int(data["version"]) != SNAPSHOT_VERSION:
            raise ParseError(f"unsupported graph snapshot version {int(data['version'])}")
        ids = tuple(str(s) for s in data["ids"])
        indptr = data["indptr"].astype(np.int64)
        indices = data["indices"].astype(np.int64)
    degrees = np.diff(indptr)
    return Graph(
        indptr=indptr,
        indices=indices,
        degrees=degrees,
        ids=ids,
        id_to_index={node: i for i, node in enumerate(ids)},
    )
