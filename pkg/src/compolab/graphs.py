"""Labelled undirected graphs with bitset adjacency.

Vertices are positive integer labels; a vertex set is an int used as a bitset
(bit v set <=> label v present).  Graphs are immutable after construction, so
they hash, compare structurally, and are safe to share across threads.  The
builders cover the family obtained from a complete graph by deleting all edges
inside the label prefix {1..m}, which is the family everything else in this
package counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Union

from .errors import InvalidParametersError, MalformedInputError

# Bitset guard: labels above this are rejected at construction.  Brute-force
# enumeration becomes infeasible far below 64 vertices, so the fixed width
# costs nothing in practice; raise it if you really need wider graphs.
MAX_LABEL = 64

VertexSetLike = Union[int, Iterable[int]]


def label_mask(labels: Iterable[int]) -> int:
    """Pack labels into a bitset."""
    mask = 0
    for v in labels:
        mask |= 1 << v
    return mask


def mask_labels(mask: int) -> tuple[int, ...]:
    """Unpack a bitset into ascending labels."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def as_vertex_mask(s: VertexSetLike) -> int:
    """Normalize a vertex set given as a bitset int or an iterable of labels."""
    if isinstance(s, int):
        return s
    return label_mask(s)


@dataclass(frozen=True)
class LabelledGraph:
    """Immutable undirected graph on integer labels.

    ``vertex_mask`` is the bitset of present labels; ``adj[v]`` is the
    neighbor bitset of label v (index 0 and absent labels hold 0).
    """

    vertex_mask: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        mask = self.vertex_mask
        if mask & 1:
            raise InvalidParametersError("vertex labels must be >= 1")
        if mask.bit_length() - 1 > MAX_LABEL:
            raise InvalidParametersError(
                f"labels above {MAX_LABEL} are not supported (got {mask.bit_length() - 1})"
            )
        if len(self.adj) != max(mask.bit_length(), 1):
            raise InvalidParametersError("adjacency table length does not match labels")
        for v, nbrs in enumerate(self.adj):
            if nbrs == 0:
                continue
            if not (mask >> v) & 1:
                raise InvalidParametersError(f"adjacency entry for absent label {v}")
            if (nbrs >> v) & 1:
                raise InvalidParametersError(f"self-loop at label {v}")
            if nbrs & ~mask:
                raise InvalidParametersError(f"neighbor of {v} outside the vertex set")
            rest = nbrs
            while rest:
                low = rest & -rest
                rest ^= low
                u = low.bit_length() - 1
                if not (self.adj[u] >> v) & 1:
                    raise InvalidParametersError(f"asymmetric edge {{{v},{u}}}")

    @property
    def n(self) -> int:
        """Vertex count."""
        return self.vertex_mask.bit_count()

    @property
    def labels(self) -> tuple[int, ...]:
        return mask_labels(self.vertex_mask)

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        """Edge set as unordered pairs, normalized to (smaller, larger)."""
        out = set()
        for v in self.labels:
            rest = self.adj[v] >> (v + 1) << (v + 1)  # neighbors above v
            while rest:
                low = rest & -rest
                rest ^= low
                out.add((v, low.bit_length() - 1))
        return frozenset(out)

    @property
    def edge_count(self) -> int:
        return sum(self.adj[v].bit_count() for v in self.labels) // 2

    def neighbors(self, v: int) -> int:
        """Neighbor bitset of label v."""
        if not (self.vertex_mask >> v) & 1:
            raise InvalidParametersError(f"label {v} is not a vertex")
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.vertex_mask >> u) & 1) and bool((self.adj[u] >> v) & 1)


def from_vertices_and_edges(
    labels: Iterable[int], pairs: Iterable[tuple[int, int]]
) -> LabelledGraph:
    """Build a graph on an explicit label set; duplicate edges collapse."""
    mask = 0
    for v in labels:
        if v < 1 or v > MAX_LABEL:
            raise InvalidParametersError(f"label {v} out of range 1..{MAX_LABEL}")
        mask |= 1 << v
    adj = [0] * max(mask.bit_length(), 1)
    for u, v in pairs:
        if u == v:
            raise MalformedInputError(f"self-loop at label {u}")
        if not (mask >> u) & 1 or not (mask >> v) & 1:
            raise MalformedInputError(f"edge {{{u},{v}}} has an endpoint outside the vertex set")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return LabelledGraph(mask, tuple(adj))


def complete(n: int) -> LabelledGraph:
    """Complete graph on labels 1..n (n = 0 gives the empty graph)."""
    if n < 0:
        raise InvalidParametersError(f"n must be >= 0, got {n}")
    labels = range(1, n + 1)
    return from_vertices_and_edges(
        labels, ((u, v) for u in labels for v in range(u + 1, n + 1))
    )


def complete_minus_clique(n: int, m: int) -> LabelledGraph:
    """Complete graph on 1..n with all edges inside {1..m} removed.

    The prefix {1..m} becomes an independent set; every pair with at least
    one endpoint above m keeps its edge.
    """
    if n < 0 or m < 0 or m > n:
        raise InvalidParametersError(f"need 0 <= m <= n, got n={n}, m={m}")
    pairs = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if v > m  # u < v, so the pair lies inside {1..m} exactly when v <= m
    ]
    return from_vertices_and_edges(range(1, n + 1), pairs)


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> LabelledGraph:
    """Graph on labels 1..n with exactly the given edges, deduplicated.

    Out-of-range labels and self-loops are malformed input.
    """
    if n < 0:
        raise InvalidParametersError(f"n must be >= 0, got {n}")
    checked = []
    for u, v in pairs:
        if not (1 <= u <= n) or not (1 <= v <= n):
            raise MalformedInputError(f"edge {{{u},{v}}} has a label outside 1..{n}")
        checked.append((u, v))
    return from_vertices_and_edges(range(1, n + 1), checked)


def delete_vertex(g: LabelledGraph, v: int) -> LabelledGraph:
    """Remove a vertex and its incident edges, keeping the remaining labels as-is."""
    if not (g.vertex_mask >> v) & 1:
        raise InvalidParametersError(f"label {v} is not a vertex")
    keep = g.vertex_mask & ~(1 << v)
    adj = [0] * max(keep.bit_length(), 1)
    rest = keep
    while rest:
        low = rest & -rest
        rest ^= low
        u = low.bit_length() - 1
        adj[u] = g.adj[u] & keep
    return LabelledGraph(keep, tuple(adj))


@lru_cache(maxsize=None)
def _connected(g: LabelledGraph, mask: int) -> bool:
    """Bitset BFS: is the subgraph induced by ``mask`` connected?"""
    reached = mask & -mask
    frontier = reached
    while frontier:
        grown = 0
        rest = frontier
        while rest:
            low = rest & -rest
            rest ^= low
            grown |= g.adj[low.bit_length() - 1]
        frontier = grown & mask & ~reached
        reached |= frontier
    return reached == mask


def is_connected_induced(g: LabelledGraph, s: VertexSetLike) -> bool:
    """True iff the subgraph induced by the nonempty vertex set s is connected."""
    mask = as_vertex_mask(s)
    if mask == 0:
        raise InvalidParametersError("the empty set induces no subgraph")
    if mask & ~g.vertex_mask:
        raise InvalidParametersError("vertex set is not a subset of the graph's vertices")
    return _connected(g, mask)


def parse_graph_file(text: str) -> LabelledGraph:
    """Parse the plain-text graph format.

    Lines starting with "#" and blank lines are ignored.  The first data line
    is ``n <count>``; each following data line is one edge ``u v`` (1-based).
    """
    n: int | None = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n" or not fields[1].isdigit():
                raise MalformedInputError(
                    f"line {lineno}: expected 'n <count>', got {line!r}"
                )
            n = int(fields[1])
            continue
        if len(fields) != 2:
            raise MalformedInputError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise MalformedInputError(
                f"line {lineno}: expected integer labels, got {line!r}"
            ) from None
        pairs.append((u, v))
    if n is None:
        raise MalformedInputError("missing 'n <count>' header line")
    return from_edge_list(n, pairs)
