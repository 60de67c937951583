"""k-uniform hypergraphs: validated construction, combinatorial invariants,
deterministic generators, and the ``.hg`` text interchange format.

Vertices are dense 0-based integers.  A hypergraph is canonical when every
edge is a strictly ascending tuple and the edge list is sorted
lexicographically; two equal hypergraphs compare equal bit for bit.  All
values are immutable after construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

from .errors import (
    DuplicateEdge,
    EdgeNotFound,
    EdgeWrongSize,
    InvalidParams,
    ParseError,
    TooManyEdges,
    VertexOutOfRange,
)

__all__ = [
    "Hypergraph",
    "DegreeSummary",
    "SplitMix64",
    "DEFAULT_EDGE_LIMIT",
    "new_validated",
    "degree_summary",
    "zagreb_index",
    "complete_k_graph",
    "complement",
    "remove_edge",
    "add_edge",
    "is_linear",
    "is_regular",
    "random_uniform",
    "disjoint_edges",
    "parse_hg",
    "format_hg",
    "load_hg",
    "save_hg",
]

#: complete/complement/random generators refuse instances beyond this many
#: potential edges; override per call for bigger experiments.
DEFAULT_EDGE_LIMIT = 10**6

Edge = tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    """A k-uniform hypergraph in canonical form.

    Construct through :func:`new_validated` (or the generators below),
    which enforce the invariants; the raw constructor trusts its input.
    """

    n: int
    k: int
    edges: tuple[Edge, ...]

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)


@dataclass(frozen=True)
class DegreeSummary:
    """Per-vertex degrees with their usual aggregates."""

    degrees: tuple[int, ...]
    max_degree: int
    min_degree: int
    avg_degree: float
    zagreb: int


def _canonical_edge(k: int, n: int, edge: Sequence[int]) -> Edge:
    vertices = tuple(sorted(edge))
    if len(vertices) != k or len(set(vertices)) != k:
        raise EdgeWrongSize(
            f"edge {tuple(edge)} must have exactly {k} distinct vertices"
        )
    if vertices[0] < 0 or vertices[-1] >= n:
        raise VertexOutOfRange(f"edge {tuple(edge)} has a vertex outside [0, {n})")
    return vertices


def new_validated(n: int, k: int, edges: Iterable[Sequence[int]]) -> Hypergraph:
    """Validate and canonicalize a hypergraph description.

    Raises:
        InvalidParams: n < 1 or k < 2.
        EdgeWrongSize: an edge does not have exactly k distinct vertices.
        VertexOutOfRange: an edge mentions a vertex outside [0, n).
        DuplicateEdge: the same edge (as a set) appears twice.
    """
    if n < 1:
        raise InvalidParams(f"vertex count must be >= 1, got {n}")
    if k < 2:
        raise InvalidParams(f"edge cardinality must be >= 2, got {k}")
    canonical: list[Edge] = []
    seen: set[Edge] = set()
    for edge in edges:
        ce = _canonical_edge(k, n, edge)
        if ce in seen:
            raise DuplicateEdge(f"edge {ce} appears more than once")
        seen.add(ce)
        canonical.append(ce)
    canonical.sort()
    return Hypergraph(n, k, tuple(canonical))


def degree_summary(h: Hypergraph) -> DegreeSummary:
    degrees = [0] * h.n
    for edge in h.edges:
        for v in edge:
            degrees[v] += 1
    return DegreeSummary(
        degrees=tuple(degrees),
        max_degree=max(degrees),
        min_degree=min(degrees),
        avg_degree=(h.k * h.m) / h.n,
        zagreb=sum(d * d for d in degrees),
    )


def zagreb_index(h: Hypergraph) -> int:
    """Sum of squared vertex degrees."""
    return degree_summary(h).zagreb


def _check_edge_budget(n: int, k: int, edge_limit: int) -> int:
    total = math.comb(n, k)
    if total > edge_limit:
        raise TooManyEdges(
            f"C({n},{k}) = {total} exceeds the edge limit {edge_limit}"
        )
    return total


def complete_k_graph(n: int, k: int, edge_limit: int = DEFAULT_EDGE_LIMIT) -> Hypergraph:
    """The k-graph on n vertices in which every k-subset is an edge."""
    if not 2 <= k <= n:
        raise InvalidParams(f"need 2 <= k <= n, got k={k}, n={n}")
    _check_edge_budget(n, k, edge_limit)
    # combinations emits ascending tuples in lexicographic order: already canonical
    return Hypergraph(n, k, tuple(combinations(range(n), k)))


def complement(h: Hypergraph, edge_limit: int = DEFAULT_EDGE_LIMIT) -> Hypergraph:
    """All k-subsets of the vertex set that are not edges of ``h``."""
    _check_edge_budget(h.n, h.k, edge_limit)
    present = set(h.edges)
    missing = tuple(e for e in combinations(range(h.n), h.k) if e not in present)
    return Hypergraph(h.n, h.k, missing)


def remove_edge(h: Hypergraph, edge: Sequence[int]) -> Hypergraph:
    """A copy of ``h`` without ``edge``; raises EdgeNotFound if absent."""
    ce = _canonical_edge(h.k, h.n, edge)
    if ce not in h.edges:
        raise EdgeNotFound(f"edge {ce} is not present")
    return Hypergraph(h.n, h.k, tuple(e for e in h.edges if e != ce))


def add_edge(h: Hypergraph, edge: Sequence[int]) -> Hypergraph:
    """A copy of ``h`` with ``edge`` added in canonical position."""
    ce = _canonical_edge(h.k, h.n, edge)
    if ce in h.edges:
        raise DuplicateEdge(f"edge {ce} is already present")
    return Hypergraph(h.n, h.k, tuple(sorted(h.edges + (ce,))))


def is_linear(h: Hypergraph) -> bool:
    """True iff every pair of edges shares at most one vertex."""
    sets = [set(e) for e in h.edges]
    return all(
        len(sets[i] & sets[j]) <= 1
        for i in range(h.m)
        for j in range(i + 1, h.m)
    )


def is_regular(h: Hypergraph) -> bool:
    """True iff all vertex degrees are equal (vacuously true when edgeless)."""
    summary = degree_summary(h)
    return summary.max_degree == summary.min_degree


class SplitMix64:
    """splitmix64: a 64-bit multiplicative-mixer PRNG.

    Pure integer arithmetic, so identical seeds give identical streams on
    every platform; this is what makes the golden-file tests portable.
    """

    _MASK = (1 << 64) - 1
    _GAMMA = 0x9E3779B97F4A7C15

    def __init__(self, seed: int):
        self._state = seed & self._MASK

    def next_uint64(self) -> int:
        self._state = (self._state + self._GAMMA) & self._MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self._MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self._MASK
        return z ^ (z >> 31)

    def next_unit(self) -> float:
        """Uniform double in [0, 1) from the top 53 bits."""
        return (self.next_uint64() >> 11) * (1.0 / (1 << 53))


def random_uniform(
    n: int,
    k: int,
    p: float,
    seed: int,
    edge_limit: int = DEFAULT_EDGE_LIMIT,
) -> Hypergraph:
    """Include each k-subset of [0, n) independently with probability p.

    Driven by :class:`SplitMix64`, consuming one draw per candidate subset
    in lexicographic order, so (n, k, p, seed) pins the result exactly.
    """
    if not 2 <= k <= n:
        raise InvalidParams(f"need 2 <= k <= n, got k={k}, n={n}")
    if not 0.0 <= p <= 1.0:
        raise InvalidParams(f"probability must be in [0, 1], got {p}")
    _check_edge_budget(n, k, edge_limit)
    rng = SplitMix64(seed)
    edges = tuple(e for e in combinations(range(n), k) if rng.next_unit() < p)
    return Hypergraph(n, k, edges)


def disjoint_edges(k: int, m: int, isolated: int = 0) -> Hypergraph:
    """m pairwise-disjoint k-edges plus optional isolated vertices."""
    if k < 2 or m < 0 or isolated < 0:
        raise InvalidParams(f"need k >= 2, m >= 0, isolated >= 0, got {(k, m, isolated)}")
    n = k * m + isolated
    if n < 1:
        raise InvalidParams("hypergraph must have at least one vertex")
    edges = tuple(tuple(range(i * k, (i + 1) * k)) for i in range(m))
    return Hypergraph(n, k, edges)


# --- the `.hg` text format -------------------------------------------------
#
# line 1: "k n m"; then m lines of k ascending space-separated vertex
# indices.  '#' starts a comment, blank lines are ignored, UTF-8 with LF.


def parse_hg(text: str) -> Hypergraph:
    """Parse `.hg` text; raises ParseError naming the offending line."""
    header: list[int] | None = None
    edges: list[list[int]] = []
    expected = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            numbers = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"expected integers, got {line!r}", lineno) from None
        if header is None:
            if len(numbers) != 3:
                raise ParseError("header must be 'k n m'", lineno)
            header = numbers
            k, n, expected = numbers
            if k < 2:
                raise ParseError(f"edge cardinality must be >= 2, got {k}", lineno)
            if n < 1:
                raise ParseError(f"vertex count must be >= 1, got {n}", lineno)
            if expected < 0:
                raise ParseError(f"edge count must be >= 0, got {expected}", lineno)
            continue
        if len(edges) == expected:
            raise ParseError(f"more than the declared {expected} edges", lineno)
        if len(numbers) != header[0]:
            raise ParseError(
                f"edge has {len(numbers)} vertices, expected k={header[0]}", lineno
            )
        if any(v < 0 or v >= header[1] for v in numbers):
            raise ParseError(f"vertex outside [0, {header[1]})", lineno)
        edges.append(numbers)
    if header is None:
        raise ParseError("empty input: missing 'k n m' header", 1)
    if len(edges) != expected:
        raise ParseError(f"declared {expected} edges but found {len(edges)}")
    k, n, _ = header
    try:
        return new_validated(n, k, edges)
    except (EdgeWrongSize, VertexOutOfRange, DuplicateEdge) as exc:
        raise ParseError(str(exc)) from exc


def format_hg(h: Hypergraph) -> str:
    """Canonical `.hg` serialization (LF endings, no comments)."""
    lines = [f"{h.k} {h.n} {h.m}"]
    lines.extend(" ".join(str(v) for v in edge) for edge in h.edges)
    return "\n".join(lines) + "\n"


def load_hg(path: str | Path) -> Hypergraph:
    return parse_hg(Path(path).read_text(encoding="utf-8"))


def save_hg(h: Hypergraph, path: str | Path) -> None:
    Path(path).write_text(format_hg(h), encoding="utf-8", newline="\n")
