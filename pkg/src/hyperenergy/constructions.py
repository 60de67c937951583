"""Derived matrices and structures of a k-uniform hypergraph.

Incidence matrix B, signless Laplacian Q = B B^T, degree matrix D, the
clique multigraph adjacency A_C = Q - D, the line multigraph adjacency
A_L = B^T B - kI, the bipartite subdivision graph, and power hypergraphs.

The two multigraph adjacencies are built from exact intersection counts,
independently of the matrix products they must equal: the identities
``B^T B = kI + A_L`` and ``B B^T = D + A_C`` are testable entrywise with
zero tolerance.
"""

from __future__ import annotations

import numpy as np

from .errors import EmptyHypergraph, InvalidPowerParams
from .hypergraph import Hypergraph, degree_summary, new_validated

__all__ = [
    "incidence_matrix",
    "signless_laplacian",
    "degree_matrix",
    "clique_multigraph",
    "line_multigraph",
    "line_multigraph_edge_count",
    "subdivision_adjacency",
    "power_hypergraph",
]


def incidence_matrix(h: Hypergraph) -> np.ndarray:
    """n x m vertex/edge incidence matrix; columns follow canonical edge order."""
    if h.m == 0:
        raise EmptyHypergraph("incidence matrix requires at least one edge")
    b = np.zeros((h.n, h.m))
    for j, edge in enumerate(h.edges):
        b[list(edge), j] = 1.0
    return b


def signless_laplacian(h: Hypergraph) -> np.ndarray:
    """Q = B B^T (n x n); the zero matrix when there are no edges."""
    if h.m == 0:
        return np.zeros((h.n, h.n))
    b = incidence_matrix(h)
    return b @ b.T


def degree_matrix(h: Hypergraph) -> np.ndarray:
    """Diagonal matrix of vertex degrees."""
    return np.diag(np.asarray(degree_summary(h).degrees, dtype=float))


def clique_multigraph(h: Hypergraph) -> np.ndarray:
    """Adjacency of the clique multigraph: entry (u, v) counts edges containing both."""
    a = np.zeros((h.n, h.n))
    for edge in h.edges:
        for i, u in enumerate(edge):
            for v in edge[i + 1 :]:
                a[u, v] += 1.0
                a[v, u] += 1.0
    return a


def line_multigraph(h: Hypergraph) -> np.ndarray:
    """Adjacency of the line multigraph: entry (e, f) = |e intersect f|."""
    if h.m == 0:
        raise EmptyHypergraph("line multigraph requires at least one edge")
    sets = [set(e) for e in h.edges]
    a = np.zeros((h.m, h.m))
    for i in range(h.m):
        for j in range(i + 1, h.m):
            common = float(len(sets[i] & sets[j]))
            a[i, j] = common
            a[j, i] = common
    return a


def line_multigraph_edge_count(h: Hypergraph) -> int:
    """Number of line-multigraph edges: sum of |e intersect f| over edge pairs."""
    sets = [set(e) for e in h.edges]
    return sum(
        len(sets[i] & sets[j]) for i in range(h.m) for j in range(i + 1, h.m)
    )


def subdivision_adjacency(h: Hypergraph) -> np.ndarray:
    """Adjacency of the subdivision graph: block form [[0, B], [B^T, 0]].

    One new vertex per edge, joined to that edge's vertices; original
    vertices occupy indices [0, n), edge vertices [n, n+m).
    """
    if h.m == 0:
        raise EmptyHypergraph("subdivision graph requires at least one edge")
    b = incidence_matrix(h)
    return np.block(
        [
            [np.zeros((h.n, h.n)), b],
            [b.T, np.zeros((h.m, h.m))],
        ]
    )


def power_hypergraph(h: Hypergraph, s: int, r: int) -> Hypergraph:
    """Blow each vertex into s copies and pad each edge to cardinality r.

    The result is r-uniform with ``n*s + (r - k*s)*m`` vertices and m edges.
    Copies of original vertex v occupy indices [v*s, (v+1)*s); the fresh
    per-edge vertices follow, grouped by canonical edge order.
    """
    if not (isinstance(s, int) and isinstance(r, int)):
        raise InvalidPowerParams(f"s and r must be integers, got {(s, r)}")
    if s < 1 or r < h.k * s:
        raise InvalidPowerParams(f"need s >= 1 and r >= k*s = {h.k * s}, got s={s}, r={r}")
    pad = r - h.k * s
    base = h.n * s
    edges = []
    for j, edge in enumerate(h.edges):
        blown = [v * s + i for v in edge for i in range(s)]
        private = [base + j * pad + i for i in range(pad)]
        edges.append(blown + private)
    return new_validated(base + pad * h.m, r, edges)
