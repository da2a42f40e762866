"""Shared brute-force oracles, kept independent of the library's fast paths."""

from __future__ import annotations

from itertools import combinations, permutations

from qsympat.perm import standardize


def brute_contains(sigma, pattern) -> bool:
    """Containment by exhaustive subsequence standardization."""
    k = len(pattern)
    if k > len(sigma):
        return False
    pattern = tuple(pattern)
    return any(standardize(sub) == pattern for sub in combinations(sigma, k))


def brute_avoiders(n, patterns) -> list[tuple[int, ...]]:
    """Filter the full symmetric group by the brute-force containment test."""
    pats = [tuple(p) for p in patterns]
    return [
        p
        for p in permutations(range(1, n + 1))
        if not any(brute_contains(p, q) for q in pats)
    ]


def all_perms(n):
    return [tuple(p) for p in permutations(range(1, n + 1))]
