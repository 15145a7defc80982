"""Eigenvector embedding of the walk-probability matrix.

The walk matrix is symmetric, so its top-``dim`` eigenpairs by magnitude
give the best rank-``dim`` approximation.  Node vectors are eigenvector
rows scaled by sqrt(|eigenvalue|); with all n pairs the signed outer
product reconstructs the matrix to floating-point accuracy.  Node
similarity is the cosine between vectors, which is invariant to the
arbitrary sign of each eigenvector.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse.linalg import LinearOperator, eigsh

from .exact import DEFAULT_MAX_NODES, adjacency_matrix, transition_matrix
from .graph import Graph

DENSE_CUTOFF = 2000


@dataclass(frozen=True)
class Embedding:
    """Rows of ``vectors`` are node embeddings; eigenvalues may be negative."""

    vectors: np.ndarray
    eigenvalues: np.ndarray
    steps: int

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]

    def reconstruct(self) -> np.ndarray:
        """Rank-``dim`` approximation of the walk matrix."""
        return (self.vectors * np.sign(self.eigenvalues)) @ self.vectors.T


def _walk_operator(g: Graph, steps: int) -> LinearOperator:
    A = adjacency_matrix(g)
    n = g.node_count
    inv_k = np.zeros(n, dtype=np.float64)
    nz = g.degrees > 0
    inv_k[nz] = 1.0 / g.degrees[nz]

    def matvec(x: np.ndarray) -> np.ndarray:
        z = inv_k * np.asarray(x, dtype=np.float64).ravel()
        acc = np.zeros(n, dtype=np.float64)
        for _ in range(steps):
            z = inv_k * (A @ z)
            acc += z
        return acc / steps

    return LinearOperator((n, n), matvec=matvec, rmatvec=matvec, dtype=np.float64)


def embed_transition(
    g: Graph,
    dim: int,
    steps: int,
    dense_cutoff: int = DENSE_CUTOFF,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> Embedding:
    """Embed nodes via the top-``dim`` eigenpairs of the walk matrix.

    Small graphs (or a full-rank request) use a dense eigendecomposition,
    subject to the ``max_nodes`` guard; larger ones use implicitly
    restarted Lanczos on a matrix-free operator.
    """
    n = g.node_count
    if not 1 <= dim <= n:
        raise ValueError(f"dim must be in 1..{n}, got {dim}")
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    if n <= dense_cutoff or dim >= n - 1:
        T = transition_matrix(g, steps, max_nodes=max_nodes)
        eigvals, eigvecs = np.linalg.eigh(T)
    else:
        # fixed start vector keeps the Lanczos iteration reproducible
        v0 = np.full(n, 1.0 / np.sqrt(n))
        eigvals, eigvecs = eigsh(_walk_operator(g, steps), k=dim, which="LM", v0=v0)
    order = np.argsort(-np.abs(eigvals))[:dim]
    eigvals = eigvals[order]
    eigvecs = eigvecs[:, order]
    return Embedding(
        vectors=eigvecs * np.sqrt(np.abs(eigvals))[None, :],
        eigenvalues=eigvals,
        steps=steps,
    )


def cosine_similarity(emb: Embedding, i: int, j: int) -> float:
    """Cosine between node vectors; exactly 1.0 when i == j."""
    return float(cosine_pairs(emb, [(i, j)])[0])


def cosine_pairs(emb: Embedding, pairs) -> np.ndarray:
    """Cosine similarities for (i, j) index pairs.

    Raises ValueError if any involved node has a zero vector, since the
    cosine is undefined there.
    """
    pairs = np.asarray(pairs, dtype=np.int64)
    if pairs.size == 0:
        return np.empty(0, dtype=np.float64)
    vi = emb.vectors[pairs[:, 0]]
    vj = emb.vectors[pairs[:, 1]]
    ni = np.linalg.norm(vi, axis=1)
    nj = np.linalg.norm(vj, axis=1)
    if np.any(ni == 0.0) or np.any(nj == 0.0):
        bad = pairs[(ni == 0.0) | (nj == 0.0)][0]
        raise ValueError(f"zero embedding vector in pair {tuple(bad)}; cosine undefined")
    out = np.einsum("ij,ij->i", vi, vj) / (ni * nj)
    out = np.clip(out, -1.0, 1.0)
    out[pairs[:, 0] == pairs[:, 1]] = 1.0
    return out
