"""Exact combinatorial number primitives: binomials, Stirling set numbers, Bell numbers.

Every value is a plain Python int, so counts stay exact at any size.  The
Stirling triangle (and the Bell row derived from it) is grown on demand and
retained for the lifetime of the process; growth is serialized behind a lock,
so identical inputs give identical outputs regardless of call interleaving.
"""

from __future__ import annotations

import math
import threading

from .errors import InvalidParametersError

# _STIRLING[n][k] = number of partitions of an n-set into exactly k blocks.
# Row 0 is [1]; _BELL[n] is the row sum.
_STIRLING: list[list[int]] = [[1]]
_BELL: list[int] = [1]
_GROW_LOCK = threading.Lock()


def _require_natural(value: int, name: str) -> int:
    if not isinstance(value, int) or value < 0:
        raise InvalidParametersError(
            f"{name} must be a non-negative integer, got {value!r}"
        )
    return value


def _grow(n: int) -> None:
    """Extend the triangle so that row n exists."""
    if len(_STIRLING) > n:
        return
    with _GROW_LOCK:
        while len(_STIRLING) <= n:
            prev = _STIRLING[-1]
            r = len(_STIRLING)
            row = [0] * (r + 1)
            for k in range(1, r):
                row[k] = k * prev[k] + prev[k - 1]
            row[r] = 1
            # _BELL first: the lock-free fast path above keys off _STIRLING,
            # so _BELL[r] must already exist once row r becomes visible.
            _BELL.append(sum(row))
            _STIRLING.append(row)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k); zero when k > n."""
    _require_natural(n, "n")
    _require_natural(k, "k")
    return math.comb(n, k)


def stirling2(n: int, k: int) -> int:
    """Number of partitions of an n-set into exactly k nonempty blocks.

    Zero when k > n.  Values come from the memoized triangle built with the
    recurrence S(n, k) = k*S(n-1, k) + S(n-1, k-1).
    """
    _require_natural(n, "n")
    _require_natural(k, "k")
    if k > n:
        return 0
    _grow(n)
    return _STIRLING[n][k]


def stirling_row(n: int) -> tuple[int, ...]:
    """Row n of the Stirling triangle as (S(n,0), ..., S(n,n))."""
    _require_natural(n, "n")
    _grow(n)
    return tuple(_STIRLING[n])


def bell(n: int) -> int:
    """Number of set partitions of an n-element set (row sum of the triangle)."""
    _require_natural(n, "n")
    _grow(n)
    return _BELL[n]
