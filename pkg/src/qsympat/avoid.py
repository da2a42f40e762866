"""Prefix-pruned enumeration of pattern-avoidance classes.

The enumerator builds permutations position by position and never extends a
prefix that already contains a forbidden pattern; since an occurrence inside
a prefix persists, only occurrences ending at the newly placed entry need
checking.  Single-threaded traversal yields members in lexicographic order.
Aggregates (counts, descent tallies) are associative merges, so the optional
process pool partitioned on the first entry produces identical results.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Iterator, Sequence

from .perm import Perm, contains_using_last, descent_set, inverse, normalize_patterns
from .qsym import QSymElement
from .tableau import Tableau, f_lambda, rsk, shape

__all__ = [
    "AvoiderClass",
    "iter_avoiders",
    "enumerate_avoiders",
    "count_avoiders",
    "descent_tally",
    "q_n",
    "d_class",
    "partition_into_knuth_classes",
    "is_union_of_knuth_classes",
    "is_pattern_knuth_closed",
]

MATERIALIZE_CAP = 10_000_000


@dataclass(frozen=True)
class AvoiderClass:
    """A materialized avoidance class S_n(patterns), members in lex order."""

    n: int
    patterns: tuple[Perm, ...]
    members: tuple[Perm, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.members)

    def __contains__(self, perm) -> bool:
        return tuple(perm) in set(self.members)


def _patterns_by_length(patterns: tuple[Perm, ...]) -> tuple[tuple[int, tuple[Perm, ...]], ...]:
    by_len: dict[int, list[Perm]] = {}
    for p in patterns:
        by_len.setdefault(len(p), []).append(p)
    return tuple(sorted((k, tuple(v)) for k, v in by_len.items()))


def iter_avoiders(
    n: int,
    patterns: Iterable[Perm],
    *,
    prefix_ok: Callable[[Sequence[int]], bool] | None = None,
    first_value: int | None = None,
) -> Iterator[Perm]:
    """Yield the members of S_n(patterns) in lexicographic order.

    prefix_ok, when given, is an extra pruning hook called on every admissible
    prefix; returning False abandons the whole subtree.  first_value restricts
    the search to permutations starting with that value.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    pats = normalize_patterns(patterns)
    if any(len(p) == 0 for p in pats):
        return  # the empty pattern is contained in everything
    by_len = _patterns_by_length(pats)

    prefix: list[int] = []
    used = [False] * (n + 1)

    def admissible() -> bool:
        m = len(prefix)
        for k, group in by_len:
            if k > m:
                break
            for pat in group:
                if contains_using_last(prefix, pat):
                    return False
        return prefix_ok is None or prefix_ok(prefix)

    def walk() -> Iterator[Perm]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(1, n + 1):
            if used[v]:
                continue
            prefix.append(v)
            used[v] = True
            if admissible():
                yield from walk()
            prefix.pop()
            used[v] = False

    if first_value is None:
        yield from walk()
    else:
        if not 1 <= first_value <= n:
            return
        prefix.append(first_value)
        used[first_value] = True
        if admissible():
            yield from walk()


def enumerate_avoiders(
    n: int, patterns: Iterable[Perm], *, cap: int = MATERIALIZE_CAP
) -> AvoiderClass:
    """Materialize S_n(patterns); raises once past the cap (stream instead)."""
    pats = normalize_patterns(patterns)
    members = []
    for p in iter_avoiders(n, pats):
        members.append(p)
        if len(members) > cap:
            raise ValueError(
                f"avoider class exceeds cap {cap}; use iter_avoiders or the tallies"
            )
    return AvoiderClass(n, pats, tuple(members))


def _count_block(args) -> int:
    n, pats, first = args
    return sum(1 for _ in iter_avoiders(n, pats, first_value=first))


def _tally_block(args) -> dict[frozenset[int], int]:
    n, pats, first = args
    tally: Counter[frozenset[int]] = Counter()
    for p in iter_avoiders(n, pats, first_value=first):
        tally[descent_set(p)] += 1
    return dict(tally)


def count_avoiders(n: int, patterns: Iterable[Perm], *, threads: int = 1) -> int:
    pats = normalize_patterns(patterns)
    if threads <= 1 or n <= 1:
        return sum(1 for _ in iter_avoiders(n, pats))
    jobs = [(n, pats, first) for first in range(1, n + 1)]
    with ProcessPoolExecutor(max_workers=min(threads, n)) as pool:
        return sum(pool.map(_count_block, jobs))


def descent_tally(
    n: int, patterns: Iterable[Perm], *, threads: int = 1
) -> dict[frozenset[int], int]:
    """Descent-set tally of S_n(patterns) without materializing members."""
    pats = normalize_patterns(patterns)
    if threads <= 1 or n <= 1:
        return dict(_cached_tally(n, pats))
    jobs = [(n, pats, first) for first in range(1, n + 1)]
    total: Counter[frozenset[int]] = Counter()
    with ProcessPoolExecutor(max_workers=min(threads, n)) as pool:
        for part in pool.map(_tally_block, jobs):
            total.update(part)
    return dict(total)


@lru_cache(maxsize=4096)
def _cached_tally(n: int, pats: tuple[Perm, ...]) -> dict[frozenset[int], int]:
    tally: Counter[frozenset[int]] = Counter()
    for p in iter_avoiders(n, pats):
        tally[descent_set(p)] += 1
    return dict(tally)


def q_n(patterns: Iterable[Perm], n: int, *, threads: int = 1) -> QSymElement:
    """The quasisymmetric generating function of S_n(patterns)."""
    return QSymElement(n, descent_tally(n, patterns, threads=threads))


def d_class(n: int, positions: Iterable[int], inverted: bool = False) -> frozenset[Perm]:
    """Permutations of n with descent set exactly the given positions.

    With inverted=True each member is replaced by its group inverse, which
    turns the class into a union of Knuth classes.
    """
    target = sorted(set(positions))
    if target and not (1 <= target[0] and target[-1] <= n - 1):
        raise ValueError(f"descent positions must lie in 1..{n - 1}: {target!r}")
    bounds = [0] + target + [n]
    runs = [bounds[i + 1] - bounds[i] for i in range(len(bounds) - 1)]

    out: list[Perm] = []
    remaining = frozenset(range(1, n + 1))

    def build(idx: int, acc: tuple[int, ...], left: frozenset[int]) -> None:
        if idx == len(runs):
            out.append(acc)
            return
        need_descent = idx > 0
        for chosen in combinations(sorted(left), runs[idx]):
            if need_descent and chosen[0] >= acc[-1]:
                continue
            build(idx + 1, acc + chosen, left - set(chosen))

    build(0, (), remaining)
    members = frozenset(inverse(p) if inverted else p for p in out)
    return members


def partition_into_knuth_classes(
    perms: Iterable[Perm],
) -> dict[Tableau, frozenset[Perm]]:
    """Group permutations by insertion tableau."""
    groups: dict[Tableau, set[Perm]] = {}
    size: int | None = None
    for p in perms:
        if size is None:
            size = len(p)
        elif len(p) != size:
            raise ValueError(f"mixed sizes: expected {size}, got {p!r}")
        t, _ = rsk(p)
        groups.setdefault(t, set()).add(p)
    return {t: frozenset(g) for t, g in groups.items()}


def is_union_of_knuth_classes(perms: Iterable[Perm]) -> bool:
    """True when every insertion-tableau group is a full Knuth class."""
    for tab, group in partition_into_knuth_classes(perms).items():
        if len(group) != f_lambda(shape(tab)):
            return False
    return True


def is_pattern_knuth_closed(patterns: Iterable[Perm]) -> bool:
    """Decide whether S_n(patterns) is a union of Knuth classes for every n.

    Checking n up to one past the longest pattern length suffices: a Knuth
    move on a permutation containing a pattern can only break containment by
    interacting with one extra letter, which is witnessed at that size.
    """
    pats = normalize_patterns(patterns)
    if not pats:
        return True
    m = max(len(p) for p in pats)
    for n in range(m + 2):
        if not is_union_of_knuth_classes(enumerate_avoiders(n, pats).members):
            return False
    return True
