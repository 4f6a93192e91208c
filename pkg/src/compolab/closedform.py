"""Closed-form and recursive counting for the complete-minus-clique family.

Let comp(n, m) be the number of vertex partitions of the graph on {1..n} with
the prefix {1..m} independent (all other pairs adjacent) such that every block
induces a connected subgraph.  This module computes comp(n, m) three ways that
the test suite plays against each other and against direct enumeration:

* a memoized double-sum recursion over the block containing a marked vertex,
* an explicit Stirling sum, comp(n, m) = sum_{k=1}^{n-m+1} S(n-m, k-1) * k^m,
* the minimax identity comp(n, m) = minimax_count_formula(n+1, m+1).

It also provides the two partition statistics the identity rests on (minimax:
smallest per-block maximum; maximin: largest per-block minimum), the
inclusion-exclusion count for minimum-singleton statistics, and row sums.

A word on ``comp_count_paper_literal``: the explicit formula circulates in
print with the summation index misplaced (sum_{k=1}^{m+1} S(m, k-1) * k^(n-m)).
That variant actually evaluates the reflected statistic one size up and
disagrees with the true counts — it yields 4 at (n, m) = (3, 1) where the
recursion, the enumeration oracle, and the published table all give 5.  It is
kept, clearly fenced, so the discrepancy stays documented and regression-tested
rather than silently patched.
"""

from __future__ import annotations

from typing import Optional

from .errors import InvalidParametersError
from .numtheory import bell, binomial, stirling2


class MemoStore:
    """Write-once (n, m) -> count table for the recursive composition count.

    Cells are immutable once written: rewriting with a different value raises,
    which also makes concurrent duplicate computation of a cell harmless (both
    writers must produce the identical value).
    """

    __slots__ = ("_table",)

    def __init__(self) -> None:
        self._table: dict[tuple[int, int], int] = {}

    def get(self, n: int, m: int) -> Optional[int]:
        return self._table.get((n, m))

    def put(self, n: int, m: int, value: int) -> None:
        key = (n, m)
        existing = self._table.get(key)
        if existing is not None and existing != value:
            raise ValueError(
                f"memo cell {key} already holds {existing}, refusing to store {value}"
            )
        self._table[key] = value

    def items(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self._table.items())

    def clear(self) -> None:
        self._table.clear()

    def __contains__(self, key: tuple[int, int]) -> bool:
        return key in self._table

    def __len__(self) -> int:
        return len(self._table)


_SHARED_MEMO = MemoStore()


def _check_pair(n: int, m: int) -> None:
    if n < 0 or m < 0 or m > n:
        raise InvalidParametersError(f"need 0 <= m <= n, got n={n}, m={m}")


def comp_count_recursive(n: int, m: int, memo: Optional[MemoStore] = None) -> int:
    """comp(n, m) by the marked-vertex recursion, memoized.

    Base case n = m is the edgeless graph with exactly one composition.  Each
    recursion step sums over how many of the other free vertices (i) and how
    many independent-prefix vertices (j) are missing from the marked vertex's
    block, which costs comp(i + j, j) compositions for the rest; every
    recursive call strictly decreases the vertex count, so the recursion
    terminates.
    """
    _check_pair(n, m)
    store = _SHARED_MEMO if memo is None else memo
    return _comp_recursive(n, m, store)


def _comp_recursive(n: int, m: int, store: MemoStore) -> int:
    if n == m:
        return 1
    cached = store.get(n, m)
    if cached is not None:
        return cached
    total = 0
    for i in range(n - m):
        inner = 0
        for j in range(m + 1):
            inner += binomial(m, j) * _comp_recursive(i + j, j, store)
        total += binomial(n - m - 1, i) * inner
    store.put(n, m, total)
    return total


def comp_count_explicit(n: int, m: int) -> int:
    """comp(n, m) by the explicit Stirling sum: sum_{k=1}^{n-m+1} S(n-m, k-1) * k^m."""
    _check_pair(n, m)
    if n == m:
        return 1
    return sum(stirling2(n - m, k - 1) * k**m for k in range(1, n - m + 2))


def comp_count_paper_literal(n: int, m: int) -> int:
    """The explicit formula as it circulates in print: sum_{k=1}^{m+1} S(m, k-1) * k^(n-m).

    Known-wrong variant (see the module docstring); exposed via the CLI's
    ``--paper-literal`` mode for documentation and regression of the erratum.
    Do not use for real counts.
    """
    _check_pair(n, m)
    return sum(stirling2(m, k - 1) * k ** (n - m) for k in range(1, m + 2))


def minimax_count_formula(n: int, m: int) -> int:
    """Number of partitions of {1..n} whose smallest per-block maximum is m.

    Computed as sum_{k=1}^{n-m+1} S(n-m, k-1) * k^(m-1): reflecting labels
    (i -> n+1-i) turns the maximin closed form into this one.
    """
    if n < 1 or not (1 <= m <= n):
        raise InvalidParametersError(f"need 1 <= m <= n, got n={n}, m={m}")
    return sum(stirling2(n - m, k - 1) * k ** (m - 1) for k in range(1, n - m + 2))


def maximin_count_formula(n: int, m: int) -> int:
    """Number of partitions of {1..n} whose largest per-block minimum is m.

    Direct construction: partition {1..m-1} into k-1 blocks, open a new block
    at m (so m is a block minimum and no later element may open another), then
    drop each of the n-m larger elements into any of the k blocks, giving
    sum_{k=1}^{m} S(m-1, k-1) * k^(n-m).
    """
    if n < 1 or not (1 <= m <= n):
        raise InvalidParametersError(f"need 1 <= m <= n, got n={n}, m={m}")
    return sum(stirling2(m - 1, k - 1) * k ** (n - m) for k in range(1, m + 1))


def k1_count_formula(n: int, m: int) -> int:
    """Number of partitions of {1..n} whose smallest singleton block is {m}.

    For m >= 1 this is the inclusion-exclusion sum
    sum_{j=1}^{m} (-1)^(j+1) * C(m-1, j-1) * B(n-j) over forced singletons
    below m.  The m = 0 value counts partitions with no singleton at all and
    is the Bell-number complement of the m >= 1 column sums.
    """
    if n < 1 or not (0 <= m <= n):
        raise InvalidParametersError(f"need 1 <= n and 0 <= m <= n, got n={n}, m={m}")
    if m == 0:
        return bell(n) - sum(k1_count_formula(n, mm) for mm in range(1, n + 1))
    total = 0
    for j in range(1, m + 1):
        term = binomial(m - 1, j - 1) * bell(n - j)
        total += term if j % 2 == 1 else -term
    return total


def row_sum(n: int, memo: Optional[MemoStore] = None) -> int:
    """sum_{m=0}^{n} comp(n, m); equals bell(n+1) because every partition of
    {1..n+1} is classified by its minimax vertex."""
    if n < 0:
        raise InvalidParametersError(f"n must be >= 0, got {n}")
    return sum(comp_count_recursive(n, m, memo) for m in range(n + 1))
