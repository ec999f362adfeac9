"""Costas array predicates, difference tables, and exhaustive enumeration.

A permutation f of {1..n} (column x holds a dot in row f(x)) is a Costas
array when all n(n-1)/2 difference vectors (j - i, f(j) - f(i)) for i < j
are pairwise distinct. Equivalently, within each row k = j - i of the
difference table the entries are distinct; that is the form checked here.
"""

from __future__ import annotations

from typing import Optional, Sequence

import numpy as np


class NotAPermutation(ValueError):
    """Input is not a permutation of 1..n."""


class SizeTooLarge(ValueError):
    """Requested size exceeds the exhaustive-search cap."""


class BlockNotClosed(ValueError):
    """The leading corner block does not map onto the lowest rows."""


_ENUM_CAP = 8


def _validated(perm: Sequence[int]) -> list[int]:
    seq = list(perm)
    for v in seq:
        if not isinstance(v, int) or isinstance(v, bool):
            raise NotAPermutation(f"non-integer entry {v!r}")
    if sorted(seq) != list(range(1, len(seq) + 1)):
        raise NotAPermutation(f"expected a permutation of 1..{len(seq)}")
    return seq


def is_costas(perm: Sequence[int]) -> bool:
    """True iff perm is a Costas permutation. Permutations of size <= 2 always are."""
    seq = _validated(perm)
    n = len(seq)
    if n <= 2:
        return True
    a = np.asarray(seq, dtype=np.int64)
    for k in range(1, n):
        d = a[k:] - a[:-k]
        if int(np.bincount(d + n).max()) > 1:
            return False
    return True


def difference_table(perm: Sequence[int]) -> list[list[int]]:
    """Row k (at index k-1) lists f(x+k) - f(x) for x = 1..n-k."""
    seq = _validated(perm)
    n = len(seq)
    return [[seq[x + k] - seq[x] for x in range(n - k)] for k in range(1, n)]


def first_collision(perm: Sequence[int]) -> Optional[tuple[int, int, int]]:
    """Lexicographically first (k, x, y) with f(x+k) - f(x) = f(y+k) - f(y), or None.

    x and y are 1-based column indices with x < y.
    """
    seq = _validated(perm)
    n = len(seq)
    for k in range(1, n):
        first_x: dict[int, int] = {}
        pairs = []
        for x in range(1, n - k + 1):
            d = seq[x + k - 1] - seq[x - 1]
            if d in first_x:
                pairs.append((first_x[d], x))
            else:
                first_x[d] = x
        if pairs:
            x, y = min(pairs)
            return (k, x, y)
    return None


def enumerate_costas(n: int) -> list[list[int]]:
    """All Costas permutations of size n in lexicographic order. Capped at n = 8."""
    if not 1 <= n <= _ENUM_CAP:
        raise SizeTooLarge(f"exhaustive enumeration supports 1..{_ENUM_CAP}, got {n}")
    out: list[list[int]] = []
    perm: list[int] = []
    used = [False] * (n + 1)
    seen = [bytearray(2 * n + 1) for _ in range(n)]

    def extend() -> None:
        x = len(perm)
        if x == n:
            out.append(perm.copy())
            return
        for v in range(1, n + 1):
            if used[v]:
                continue
            marks = []
            ok = True
            for k in range(1, x + 1):
                d = v - perm[x - k] + n
                row = seen[k]
                if row[d]:
                    ok = False
                    break
                marks.append((row, d))
            if not ok:
                continue
            for row, d in marks:
                row[d] = 1
            used[v] = True
            perm.append(v)
            extend()
            perm.pop()
            used[v] = False
            for row, d in marks:
                row[d] = 0

    extend()
    return out


def remove_leading(perm: Sequence[int], t: int) -> list[int]:
    """Drop the first t columns and renumber, assuming the t x t corner is closed.

    Requires f to map {1..t} onto {1..t}; the result is the permutation
    x -> f(x + t) - t of size n - t. Raises BlockNotClosed otherwise.
    """
    seq = _validated(perm)
    n = len(seq)
    if not 0 <= t <= n:
        raise ValueError(f"block size {t} outside 0..{n}")
    for x in range(1, n + 1):
        if (x <= t) != (seq[x - 1] <= t):
            raise BlockNotClosed(f"column {x} breaks the {t} x {t} corner block")
    return [v - t for v in seq[t:]]
