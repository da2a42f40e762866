"""Partitions, standard Young tableaux, row insertion, and Knuth classes.

A partition is a weakly decreasing tuple of positive integers; a tableau is
a tuple of row tuples.  Standard tableaux on n boxes contain 1..n with rows
and columns strictly increasing.  Enumeration orders are deterministic:
partitions in reverse-lexicographic order, tableaux sorted by row reading
word, so serialized output is stable across runs.

Text form for tableaux: rows joined by "/", each row in the permutation
text form ("12/3" has rows 1,2 and 3).
"""

from __future__ import annotations

from bisect import bisect_left
from functools import lru_cache
from math import factorial
from typing import Sequence

from .perm import (
    Perm,
    check_canonical,
    format_permutation,
    parse_permutation,
)

Partition = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]

__all__ = [
    "Partition",
    "Tableau",
    "is_partition_shape",
    "check_partition",
    "enumerate_partitions",
    "hooks",
    "fattened_hooks",
    "nontrivial_hooks",
    "t_shapes",
    "transpose_partition",
    "transpose_tableau",
    "transpose",
    "f_lambda",
    "enumerate_syt",
    "shape",
    "is_standard",
    "check_standard",
    "tableau_descents",
    "rsk",
    "rsk_inverse",
    "knuth_class",
    "knuth_aggregate",
    "knuth_neighbors",
    "superstandard",
    "is_superstandard_hook",
    "column_reading_word",
    "format_tableau",
    "parse_tableau",
]


def is_partition_shape(lam: Sequence[int]) -> bool:
    return all(a >= 1 for a in lam) and all(
        lam[i] >= lam[i + 1] for i in range(len(lam) - 1)
    )


def check_partition(lam: Sequence[int]) -> Partition:
    if not is_partition_shape(lam):
        raise ValueError(f"not a partition: {lam!r}")
    return tuple(lam)


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse-lexicographic order.

    >>> enumerate_partitions(4)
    ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")

    def gen(rest: int, cap: int):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(gen(n, n))


def fattened_hooks(n: int, j: int) -> tuple[Partition, ...]:
    """Partitions of n whose diagram omits the box in row 2, column j."""
    if j < 2:
        raise ValueError(f"fattened hooks need j >= 2, got {j}")
    return tuple(
        lam
        for lam in enumerate_partitions(n)
        if len(lam) < 2 or lam[1] < j
    )


def hooks(n: int) -> tuple[Partition, ...]:
    """Partitions of the form (a, 1, ..., 1)."""
    return fattened_hooks(n, 2)


def nontrivial_hooks(n: int) -> tuple[Partition, ...]:
    """Hooks other than the single row and the single column."""
    return tuple(lam for lam in hooks(n) if len(lam) > 1 and lam[0] > 1)


def t_shapes(n: int) -> tuple[Partition, ...]:
    """Nontrivial hooks of n-1 with the box in row 2, column 2 added."""
    if n < 1:
        return ()
    out = []
    for lam in nontrivial_hooks(n - 1):
        out.append((lam[0], 2) + lam[2:])
    return tuple(sorted(out, reverse=True))


def transpose_partition(lam: Sequence[int]) -> Partition:
    lam = check_partition(lam)
    if not lam:
        return ()
    return tuple(
        sum(1 for a in lam if a > j) for j in range(lam[0])
    )


def shape(tab: Tableau) -> Partition:
    return tuple(len(row) for row in tab)


def transpose_tableau(tab: Tableau) -> Tableau:
    if not tab:
        return ()
    return tuple(
        tuple(row[j] for row in tab if len(row) > j) for j in range(len(tab[0]))
    )


def transpose(obj):
    """Transpose either a partition or a tableau."""
    if obj and isinstance(obj[0], tuple):
        return transpose_tableau(obj)
    return transpose_partition(obj)


def f_lambda(lam: Sequence[int]) -> int:
    """Number of standard tableaux of the given shape, by hook lengths."""
    lam = check_partition(lam)
    n = sum(lam)
    conj = transpose_partition(lam)
    prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod *= (row - j) + (conj[j] - i) - 1
    q, r = divmod(factorial(n), prod)
    assert r == 0
    return q


@lru_cache(maxsize=None)
def enumerate_syt(lam: Sequence[int]) -> tuple[Tableau, ...]:
    """All standard tableaux of a shape, sorted by row reading word."""
    lam = check_partition(lam)
    n = sum(lam)
    rows: list[list[int]] = [[] for _ in lam]
    out: list[Tableau] = []

    def build(v: int) -> None:
        if v > n:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i, r in enumerate(rows):
            if len(r) < lam[i] and (i == 0 or len(rows[i - 1]) > len(r)):
                r.append(v)
                build(v + 1)
                r.pop()

    build(1)
    out.sort(key=lambda t: tuple(v for row in t for v in row))
    return tuple(out)


def is_standard(tab: Tableau) -> bool:
    lam = shape(tab)
    if not is_partition_shape(lam) and lam != ():
        return False
    entries = [v for row in tab for v in row]
    if sorted(entries) != list(range(1, len(entries) + 1)):
        return False
    for row in tab:
        if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
            return False
    for i in range(1, len(tab)):
        if any(tab[i - 1][j] >= tab[i][j] for j in range(len(tab[i]))):
            return False
    return True


def check_standard(tab) -> Tableau:
    t = tuple(tuple(row) for row in tab)
    if not is_standard(t):
        raise ValueError(f"not a standard tableau: {tab!r}")
    return t


def tableau_descents(tab: Tableau) -> frozenset[int]:
    """Entries i whose successor i+1 sits in a lower row."""
    rowof = {}
    for i, row in enumerate(tab):
        for v in row:
            rowof[v] = i
    n = len(rowof)
    return frozenset(i for i in range(1, n) if rowof[i + 1] > rowof[i])


def rsk(perm: Sequence[int]) -> tuple[Tableau, Tableau]:
    """Row insertion: perm -> (insertion tableau, recording tableau).

    Bumping replaces the smallest row entry strictly greater than the
    incoming value.
    """
    check_canonical(perm)
    p: list[list[int]] = []
    q: list[list[int]] = []
    for step, v in enumerate(perm, start=1):
        i = 0
        while True:
            if i == len(p):
                p.append([v])
                q.append([step])
                break
            row = p[i]
            j = bisect_left(row, v)
            if j == len(row):
                row.append(v)
                q[i].append(step)
                break
            row[j], v = v, row[j]
            i += 1
    return tuple(tuple(r) for r in p), tuple(tuple(r) for r in q)


def rsk_inverse(p: Tableau, q: Tableau) -> Perm:
    """Recover the permutation with insertion tableau p and recording tableau q."""
    p = check_standard(p)
    q = check_standard(q)
    if shape(p) != shape(q):
        raise ValueError(f"shape mismatch: {shape(p)} vs {shape(q)}")
    rows = [list(r) for r in p]
    pos = {}
    for i, row in enumerate(q):
        for j, v in enumerate(row):
            pos[v] = (i, j)
    n = len(pos)
    out = [0] * n
    for step in range(n, 0, -1):
        i, j = pos[step]
        x = rows[i].pop()
        if not rows[i]:
            rows.pop()
        for r in range(i - 1, -1, -1):
            row = rows[r]
            idx = bisect_left(row, x) - 1
            row[idx], x = x, row[idx]
        out[step - 1] = x
    return tuple(out)


def knuth_class(p: Tableau) -> frozenset[Perm]:
    """All permutations whose insertion tableau is p."""
    p = check_standard(p)
    return frozenset(rsk_inverse(p, q) for q in enumerate_syt(shape(p)))


def knuth_aggregate(lam: Sequence[int]) -> frozenset[Perm]:
    """All permutations whose insertion tableau has the given shape."""
    lam = check_partition(lam)
    out: set[Perm] = set()
    for p in enumerate_syt(lam):
        out |= knuth_class(p)
    return frozenset(out)


def knuth_neighbors(perm: Sequence[int]) -> frozenset[Perm]:
    """Permutations one elementary Knuth move away.

    Moves swap adjacent letters inside a window xzy <-> zxy (x < y < z, swap
    the first two) or yxz <-> yzx (x < y < z, swap the last two).
    """
    perm = check_canonical(perm)
    out: set[Perm] = set()
    w = list(perm)
    for i in range(len(w) - 2):
        x, y, z = w[i], w[i + 1], w[i + 2]
        if (x < z < y) or (y < z < x):
            out.add(tuple(w[:i]) + (y, x, z) + tuple(w[i + 3 :]))
        if (y < x < z) or (z < x < y):
            out.add(tuple(w[:i]) + (x, z, y) + tuple(w[i + 3 :]))
    return frozenset(out)


def superstandard(lam: Sequence[int], orientation: str = "row") -> Tableau:
    """Fill a shape consecutively along rows, or along columns."""
    lam = check_partition(lam)
    if orientation == "row":
        rows = []
        nxt = 1
        for a in lam:
            rows.append(tuple(range(nxt, nxt + a)))
            nxt += a
        return tuple(rows)
    if orientation == "column":
        return transpose_tableau(superstandard(transpose_partition(lam), "row"))
    raise ValueError(f"orientation must be 'row' or 'column', got {orientation!r}")


def is_superstandard_hook(tab: Tableau) -> bool:
    """True if the shape is a hook and the filling is row or column consecutive."""
    lam = shape(tab)
    if len(lam) > 1 and lam[1] > 1:
        return False
    return tab == superstandard(lam, "row") or tab == superstandard(lam, "column")


def column_reading_word(tab: Tableau) -> Perm:
    """Columns read bottom to top, concatenated left to right."""
    cols = transpose_tableau(tab)
    return tuple(v for col in cols for v in reversed(col))


def format_tableau(tab: Tableau) -> str:
    return "/".join(format_permutation(row) for row in tab)


def parse_tableau(text: str) -> Tableau:
    rows = tuple(parse_permutation(chunk) for chunk in text.strip().split("/"))
    return check_standard(rows)
