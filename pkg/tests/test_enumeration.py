"""Partition streams, composition filtering, and statistic counts by enumeration."""

import random

import pytest
from conftest import MINIMAX_EXAMPLE_3, blocks_of, enumerate_partitions

from compolab import (
    Composition,
    InvalidParametersError,
    Partition,
    ResourceLimitError,
    bell,
    complete,
    complete_minus_clique,
    composition_count_brute,
    compositions,
    from_edge_list,
    is_composition,
    kj_count_brute,
    minimax_count_brute,
    minimax_restricted,
    minimax_vertex,
    partitions_of,
    set_partitions,
)


# ---------------------------------------------------------------------------
# Partition type
# ---------------------------------------------------------------------------

def test_partition_from_blocks_canonicalizes():
    p = Partition.from_blocks([{3}, {1, 5}])
    assert p.labels == (1, 3, 5)
    assert p.rgs == (0, 1, 0)
    assert p.blocks() == ((1, 5), (3,))
    assert str(p) == "{1,5}|{3}"
    assert Partition.from_blocks(p.blocks()) == p


def test_partition_blocks_sorted_by_minimum():
    p = Partition.from_blocks([{2, 4}, {1, 6}, {3}, {5}])
    assert [block[0] for block in p.blocks()] == [1, 2, 3, 5]


def test_partition_rejects_bad_input():
    with pytest.raises(InvalidParametersError):
        Partition((1, 2), (0,))  # length mismatch
    with pytest.raises(InvalidParametersError):
        Partition((2, 1), (0, 0))  # labels out of order
    with pytest.raises(InvalidParametersError):
        Partition((1, 2), (0, 2))  # growth violated
    with pytest.raises(InvalidParametersError):
        Partition((1, 2), (1, 0))  # must start at 0
    with pytest.raises(InvalidParametersError):
        Partition.from_blocks([{1}, {1, 2}])  # overlap
    with pytest.raises(InvalidParametersError):
        Partition.from_blocks([set()])  # empty block


def test_partition_is_immutable_and_hashable():
    p = Partition.from_blocks([{1, 2}])
    with pytest.raises(AttributeError):
        p.rgs = (0, 1)
    assert p == Partition((1, 2), (0, 0))
    assert len({p, Partition((1, 2), (0, 0)), Partition((1, 2), (0, 1))}) == 2


# ---------------------------------------------------------------------------
# Streams
# ---------------------------------------------------------------------------

def test_set_partitions_counts():
    assert [sum(1 for _ in set_partitions(n)) for n in range(9)] == [
        bell(n) for n in range(9)
    ]


def test_set_partitions_zero():
    (only,) = list(set_partitions(0))
    assert only.labels == () and only.blocks() == ()


def test_set_partitions_order_is_lexicographic_and_unique():
    for n in range(7):
        seen = list(set_partitions(n))
        assert len(set(seen)) == len(seen)
        rgs_list = [p.rgs for p in seen]
        assert rgs_list == sorted(rgs_list)
    first, *_, last = list(set_partitions(4))
    assert first == Partition.from_blocks([{1, 2, 3, 4}])
    assert last == Partition.from_blocks([{1}, {2}, {3}, {4}])


def test_set_partitions_match_independent_oracle():
    for n in range(8):
        ours = {blocks_of(p) for p in set_partitions(n)}
        oracle = set(enumerate_partitions(range(1, n + 1)))
        assert ours == oracle


def test_partitions_of_arbitrary_labels():
    parts = list(partitions_of([4, 2, 9]))
    assert len(parts) == 5
    assert all(p.labels == (2, 4, 9) for p in parts)


def test_streams_are_independent():
    first = set_partitions(4)
    second = set_partitions(4)
    head = [next(first) for _ in range(3)]
    assert list(second)[:3] == head  # advancing one stream never moves the other


def test_cap_guards_enumeration():
    with pytest.raises(ResourceLimitError):
        set_partitions(13)
    with pytest.raises(ResourceLimitError):
        set_partitions(5, cap=4)
    with pytest.raises(ResourceLimitError):
        composition_count_brute(complete(6), cap=5)
    assert composition_count_brute(complete(6), cap=6) == bell(6)


# ---------------------------------------------------------------------------
# Compositions
# ---------------------------------------------------------------------------

def test_is_composition_examples():
    k3 = complete(3)
    path = from_edge_list(3, [(1, 2), (2, 3)])
    edgeless = from_edge_list(3, [])
    assert is_composition(k3, Partition.from_blocks([{2}, {1, 3}]))
    assert not is_composition(path, Partition.from_blocks([{2}, {1, 3}]))
    assert is_composition(edgeless, Partition.from_blocks([{1}, {2}, {3}]))
    with pytest.raises(InvalidParametersError):
        is_composition(k3, Partition.from_blocks([{1, 2}]))


def test_composition_type_validates():
    path = from_edge_list(3, [(1, 2), (2, 3)])
    Composition(path, Partition.from_blocks([{1, 2}, {3}]))
    with pytest.raises(InvalidParametersError):
        Composition(path, Partition.from_blocks([{1, 3}, {2}]))


def test_composition_count_examples():
    assert composition_count_brute(complete(3)) == 5
    assert composition_count_brute(from_edge_list(3, [(1, 2), (2, 3)])) == 4
    assert composition_count_brute(complete_minus_clique(6, 4)) == 97
    assert composition_count_brute(from_edge_list(5, [])) == 1
    assert composition_count_brute(complete(0)) == 1


def test_composition_count_against_reference_table():
    from conftest import COMP_TABLE

    for n, row in COMP_TABLE.items():
        for m, expected in enumerate(row):
            assert composition_count_brute(complete_minus_clique(n, m)) == expected


def test_complete_graph_count_is_bell():
    for n in range(11):
        assert composition_count_brute(complete(n)) == bell(n), n


def test_composition_count_matches_oracle_filter():
    # Count the oracle's partitions whose blocks all pass a from-scratch check.
    rng = random.Random(52)
    for _ in range(25):
        n = rng.randint(0, 6)
        edges = [
            (u, v)
            for u in range(1, n + 1)
            for v in range(u + 1, n + 1)
            if rng.random() < 0.5
        ]
        g = from_edge_list(n, edges)
        edge_set = set(edges)

        def connected(block):
            reached = {min(block)} if block else set()
            frontier = list(reached)
            while frontier:
                x = frontier.pop()
                for u, v in edge_set:
                    for a, b in ((u, v), (v, u)):
                        if a == x and b in block and b not in reached:
                            reached.add(b)
                            frontier.append(b)
            return reached == set(block)

        expected = sum(
            1
            for p in enumerate_partitions(range(1, n + 1))
            if all(connected(block) for block in p)
        )
        assert composition_count_brute(g) == expected


def test_compositions_stream():
    assert [str(c) for c in compositions(complete(2))] == ["{1,2}", "{1}|{2}"]
    assert [str(c) for c in compositions(from_edge_list(2, []))] == ["{1}|{2}"]
    assert sum(1 for _ in compositions(complete_minus_clique(3, 2))) == 4
    k3 = list(compositions(complete(3)))
    assert [str(c) for c in k3] == [
        "{1,2,3}",
        "{1,2}|{3}",
        "{1,3}|{2}",
        "{1}|{2,3}",
        "{1}|{2}|{3}",
    ]


def test_workers_give_identical_totals():
    for g in (complete(7), complete_minus_clique(8, 3), from_edge_list(6, [(1, 2), (3, 4), (4, 5)])):
        single = composition_count_brute(g)
        assert composition_count_brute(g, workers=2) == single
        assert composition_count_brute(g, workers=4) == single


def test_edge_addition_monotonicity():
    rng = random.Random(77)
    pairs = 0
    while pairs < 40:
        n = rng.randint(2, 7)
        present = [
            (u, v)
            for u in range(1, n + 1)
            for v in range(u + 1, n + 1)
            if rng.random() < 0.4
        ]
        absent = [
            (u, v)
            for u in range(1, n + 1)
            for v in range(u + 1, n + 1)
            if (u, v) not in present
        ]
        if not absent:
            continue
        extra = rng.choice(absent)
        smaller = composition_count_brute(from_edge_list(n, present))
        larger = composition_count_brute(from_edge_list(n, present + [extra]))
        assert smaller <= larger
        pairs += 1


# ---------------------------------------------------------------------------
# Minimax statistics
# ---------------------------------------------------------------------------

def test_minimax_vertex_examples():
    for blocks, expected in MINIMAX_EXAMPLE_3:
        assert minimax_vertex(Partition.from_blocks(blocks)) == expected
    assert minimax_vertex(Partition.from_blocks([])) is None


def test_minimax_restricted_examples():
    assert minimax_restricted(Partition.from_blocks([{1, 2, 3}]), 1) is None
    assert minimax_restricted(Partition.from_blocks([{1}, {2, 3}]), 1) == 1
    assert minimax_restricted(Partition.from_blocks([{3}, {1, 2}]), 2) == 2
    with pytest.raises(InvalidParametersError):
        minimax_restricted(Partition.from_blocks([{1}]), 0)


def test_minimax_count_examples():
    assert minimax_count_brute(3, 2) == 2
    assert minimax_count_brute(3, 3) == 1
    assert minimax_count_brute(4, 2) == 5
    with pytest.raises(InvalidParametersError):
        minimax_count_brute(4, 0)
    with pytest.raises(InvalidParametersError):
        minimax_count_brute(4, 5)


def test_minimax_count_matches_statistic_histogram():
    for n in range(1, 9):
        histogram = {m: 0 for m in range(1, n + 1)}
        for p in set_partitions(n):
            histogram[minimax_vertex(p)] += 1
        for m in range(1, n + 1):
            assert minimax_count_brute(n, m) == histogram[m]
        assert sum(histogram.values()) == bell(n)


def test_kj_count_examples():
    assert kj_count_brute(5, 3, 1) == 7
    assert kj_count_brute(3, 0, 1) == 1
    assert kj_count_brute(3, 1, 2) == 2
    assert kj_count_brute(0, 0, 1) == 1
    for m in range(1, 8):
        assert kj_count_brute(7, m, 7) == minimax_count_brute(7, m)
    with pytest.raises(InvalidParametersError):
        kj_count_brute(3, 1, 0)
    with pytest.raises(InvalidParametersError):
        kj_count_brute(3, 4, 1)


def test_kj_counts_partition_bell_completely():
    for n in range(1, 8):
        for j in range(1, n + 1):
            total = sum(kj_count_brute(n, m, j) for m in range(n + 1))
            assert total == bell(n), (n, j)


def test_kj_completeness_at_larger_n():
    # One enumeration pass per n builds the statistic histogram for every j at
    # once; each histogram must partition bell(n), and sampled cells must match
    # the counting operation itself.
    rng = random.Random(9)
    for n in (9, 10):
        histograms = {j: {m: 0 for m in range(n + 1)} for j in range(1, n + 1)}
        for p in set_partitions(n):
            blocks = p.blocks()
            for j in range(1, n + 1):
                qualifying = [block[-1] for block in blocks if len(block) <= j]
                stat = min(qualifying) if qualifying else 0
                histograms[j][stat] += 1
        for j in range(1, n + 1):
            assert sum(histograms[j].values()) == bell(n), (n, j)
        for _ in range(3):
            j = rng.randint(1, n)
            m = rng.randint(0, n)
            assert kj_count_brute(n, m, j) == histograms[j][m], (n, m, j)


def test_kj_count_matches_restricted_statistic_histogram():
    for n in range(7):
        for j in range(1, n + 2):
            histogram = {m: 0 for m in range(n + 1)}
            for p in set_partitions(n):
                stat = minimax_restricted(p, j)
                histogram[0 if stat is None else stat] += 1
            for m in range(n + 1):
                assert kj_count_brute(n, m, j) == histogram[m]
