"""Shared test oracles and reference data.

The oracle helpers here deliberately reimplement things the library already
does (partition enumeration, connectivity) with different algorithms, so the
tests can play the two implementations against each other.  The reference
tables hold independently verified values for the counting functions; the
suite re-derives all of them by brute-force enumeration as well.
"""

from __future__ import annotations


def enumerate_partitions(items) -> list[frozenset[frozenset[int]]]:
    """Every set partition of ``items`` as a frozenset of frozenset blocks.

    First-element recursion: partition the rest, then either give the first
    element its own block or add it to an existing one.  Independent of the
    library's restricted-growth-string iterator.
    """
    items = list(items)
    if not items:
        return [frozenset()]
    first, rest = items[0], items[1:]
    out = []
    for sub in enumerate_partitions(rest):
        out.append(sub | {frozenset({first})})
        for block in sub:
            out.append((sub - {block}) | {block | {first}})
    return out


def pascal_triangle(rows: int) -> list[list[int]]:
    """Rows 0..rows of Pascal's triangle, built purely by addition."""
    triangle = [[1]]
    for _ in range(rows):
        prev = triangle[-1]
        triangle.append(
            [1] + [prev[i] + prev[i + 1] for i in range(len(prev) - 1)] + [1]
        )
    return triangle


def bfs_connected(edge_set, subset) -> bool:
    """From-scratch BFS over adjacency dicts; subset must be nonempty."""
    subset = set(subset)
    adjacency: dict[int, set[int]] = {v: set() for v in subset}
    for u, v in edge_set:
        if u in subset and v in subset:
            adjacency[u].add(v)
            adjacency[v].add(u)
    start = next(iter(subset))
    seen = {start}
    queue = [start]
    while queue:
        x = queue.pop()
        for y in adjacency[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen == subset


def blocks_of(partition) -> frozenset[frozenset[int]]:
    """Library Partition -> the oracle's frozenset-of-frozensets shape."""
    return frozenset(frozenset(block) for block in partition.blocks())


# comp(n, m): compositions of the complete graph on 1..n with the prefix
# {1..m} made independent.  Rows n = 0..6, columns m = 0..n.
COMP_TABLE = {
    0: (1,),
    1: (1, 1),
    2: (2, 2, 1),
    3: (5, 5, 4, 1),
    4: (15, 15, 13, 8, 1),
    5: (52, 52, 47, 35, 16, 1),
    6: (203, 203, 188, 153, 97, 32, 1),
}

# k1(n, m): partitions of {1..n} whose smallest singleton block is {m}
# (m = 0: no singleton at all).  Rows n = 1..8, columns m = 0..n.
K1_TABLE = {
    1: (0, 1),
    2: (1, 1, 0),
    3: (1, 2, 1, 1),
    4: (4, 5, 3, 2, 1),
    5: (11, 15, 10, 7, 5, 4),
    6: (41, 52, 37, 27, 20, 15, 11),
    7: (162, 203, 151, 114, 87, 67, 52, 41),
    8: (715, 877, 674, 523, 409, 322, 255, 203, 162),
}

# The five partitions of {1,2,3} with their minimax vertices.
MINIMAX_EXAMPLE_3 = [
    (({1, 2, 3},), 3),
    (({1}, {2, 3}), 1),
    (({2}, {1, 3}), 2),
    (({3}, {1, 2}), 2),
    (({1}, {2}, {3}), 1),
]
