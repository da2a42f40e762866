"""Permutations in one-line notation, patterns, descents, and shuffles.

A permutation is a tuple of distinct positive integers.  A *canonical*
permutation of size n uses exactly the values 1..n; pattern relations are
taken up to standardization, so the containment routines accept any word
with distinct entries.  All functions are pure; permutations are never
mutated in place.

Text form: digits for entries up to 9 ("35716824"), comma-separated
otherwise ("10,2,1,...").  The empty permutation renders as "()".
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

Perm = tuple[int, ...]
Composition = tuple[int, ...]

__all__ = [
    "Perm",
    "Composition",
    "iota",
    "delta",
    "standardize",
    "is_canonical",
    "check_canonical",
    "contains",
    "contains_using_last",
    "avoids_all",
    "descent_set",
    "increasing_runs",
    "descent_composition",
    "composition_to_descents",
    "descents_to_composition",
    "complement",
    "reverse",
    "inverse",
    "rot180",
    "perm_with_descent_set",
    "shuffle_words",
    "shuffle",
    "shuffle_sets",
    "partial_shuffle",
    "contract",
    "expand",
    "is_comodal",
    "alpha_descent_set",
    "alpha_descent_number",
    "is_alpha_comodal",
    "normalize_patterns",
    "parse_permutation",
    "format_permutation",
    "parse_pattern_set",
    "format_pattern_set",
]


def iota(n: int) -> Perm:
    """The increasing permutation 12...n."""
    return tuple(range(1, n + 1))


def delta(n: int) -> Perm:
    """The decreasing permutation n...21."""
    return tuple(range(n, 0, -1))


def standardize(seq: Sequence[int]) -> Perm:
    """Relabel a distinct-entry word onto 1..k, preserving relative order.

    >>> standardize((5, 7, 4))
    (2, 3, 1)
    """
    if len(set(seq)) != len(seq):
        raise ValueError(f"entries must be distinct: {seq!r}")
    rank = {v: i + 1 for i, v in enumerate(sorted(seq))}
    return tuple(rank[v] for v in seq)


def is_canonical(perm: Sequence[int]) -> bool:
    """True if perm is a permutation of 1..n in one-line notation."""
    n = len(perm)
    return set(perm) == set(range(1, n + 1))


def check_canonical(perm: Sequence[int]) -> Perm:
    if not is_canonical(perm):
        raise ValueError(f"not a permutation of 1..{len(perm)}: {perm!r}")
    return tuple(perm)


def contains(sigma: Sequence[int], pattern: Sequence[int]) -> bool:
    """True if some subsequence of sigma standardizes to pattern.

    Backtracking embedding: positions are chosen left to right and every
    partial embedding constrains candidate values to an open interval, so
    infeasible branches die early.

    >>> contains((5, 1, 3, 2, 7, 4, 6), (2, 3, 1))
    True
    """
    k, n = len(pattern), len(sigma)
    if k == 0:
        return True
    if k > n:
        return False
    vals = [0] * k

    def place(t: int, start: int) -> bool:
        if t == k:
            return True
        lo, hi = float("-inf"), float("inf")
        for s in range(t):
            if pattern[s] < pattern[t]:
                if vals[s] > lo:
                    lo = vals[s]
            elif vals[s] < hi:
                hi = vals[s]
        for p in range(start, n - (k - t) + 1):
            v = sigma[p]
            if lo < v < hi:
                vals[t] = v
                if place(t + 1, p + 1):
                    return True
        return False

    return place(0, 0)


def contains_using_last(word: Sequence[int], pattern: Sequence[int]) -> bool:
    """True if word contains pattern by an occurrence using its last position.

    This is the incremental test behind prefix-pruned enumeration: a pattern
    occurrence inside a growing prefix persists, so only occurrences that end
    at the newly placed position need rechecking.
    """
    k, m = len(pattern), len(word)
    if k == 0:
        return True
    if k > m:
        return False
    if k == 1:
        return True
    vals = [0] * k
    vals[k - 1] = word[m - 1]
    plast = pattern[k - 1]

    def place(t: int, start: int) -> bool:
        if t == k - 1:
            return True
        lo, hi = float("-inf"), float("inf")
        pt = pattern[t]
        for s in range(t):
            if pattern[s] < pt:
                if vals[s] > lo:
                    lo = vals[s]
            elif vals[s] < hi:
                hi = vals[s]
        if plast < pt:
            if vals[k - 1] > lo:
                lo = vals[k - 1]
        elif vals[k - 1] < hi:
            hi = vals[k - 1]
        for p in range(start, m - k + t + 1):
            v = word[p]
            if lo < v < hi:
                vals[t] = v
                if place(t + 1, p + 1):
                    return True
        return False

    return place(0, 0)


def avoids_all(sigma: Sequence[int], patterns: Iterable[Sequence[int]]) -> bool:
    """True if sigma contains none of the patterns (vacuously true for none)."""
    return not any(contains(sigma, p) for p in patterns)


def descent_set(perm: Sequence[int]) -> frozenset[int]:
    """Positions i (1-based, i <= n-1) with perm[i] > perm[i+1].

    >>> sorted(descent_set((3, 5, 7, 1, 6, 8, 2, 4)))
    [3, 6]
    """
    return frozenset(i + 1 for i in range(len(perm) - 1) if perm[i] > perm[i + 1])


def increasing_runs(perm: Sequence[int]) -> list[Perm]:
    """Maximal increasing factors; their concatenation restores perm."""
    runs: list[Perm] = []
    start = 0
    for i in range(1, len(perm) + 1):
        if i == len(perm) or perm[i - 1] > perm[i]:
            runs.append(tuple(perm[start:i]))
            start = i
    return runs


def descent_composition(perm: Sequence[int]) -> Composition:
    """Composition of run lengths, e.g. (2, 3, 1) for 561342."""
    return tuple(len(r) for r in increasing_runs(perm))


def composition_to_descents(alpha: Sequence[int]) -> frozenset[int]:
    """Partial sums of alpha, the last one dropped."""
    if any(a < 1 for a in alpha):
        raise ValueError(f"composition parts must be positive: {alpha!r}")
    out, acc = [], 0
    for a in alpha[:-1]:
        acc += a
        out.append(acc)
    return frozenset(out)


def descents_to_composition(positions: Iterable[int], n: int) -> Composition:
    """Inverse of composition_to_descents at grade n."""
    pos = sorted(positions)
    if pos and not (1 <= pos[0] and pos[-1] <= n - 1):
        raise ValueError(f"descent positions must lie in 1..{n - 1}: {pos!r}")
    if len(set(pos)) != len(pos):
        raise ValueError(f"duplicate descent positions: {pos!r}")
    if n == 0:
        return ()
    bounds = [0] + pos + [n]
    return tuple(bounds[i + 1] - bounds[i] for i in range(len(bounds) - 1))


def complement(perm: Sequence[int]) -> Perm:
    """Value flip v -> n+1-v."""
    n = len(perm)
    return tuple(n + 1 - v for v in perm)


def reverse(perm: Sequence[int]) -> Perm:
    """Position flip, reading the word right to left."""
    return tuple(reversed(perm))


def inverse(perm: Sequence[int]) -> Perm:
    """Group inverse of a canonical permutation."""
    out = [0] * len(perm)
    for i, v in enumerate(perm):
        out[v - 1] = i + 1
    return tuple(out)


def rot180(perm: Sequence[int]) -> Perm:
    """complement . reverse, a 180 degree rotation of the permutation matrix."""
    return complement(reverse(perm))


def perm_with_descent_set(positions: Iterable[int], n: int) -> Perm:
    """The unique {132, 312}-avoiding permutation with the given descents.

    Positions in J+1 carry #J..1 in decreasing order, the remaining positions
    carry #J+1..n in increasing order.
    """
    pos = sorted(positions)
    if pos and not (1 <= pos[0] and pos[-1] <= n - 1):
        raise ValueError(f"descent positions must lie in 1..{n - 1}: {pos!r}")
    j = len(pos)
    out = [0] * n
    for rank, p in enumerate(pos):
        out[p] = j - rank
    nxt = j + 1
    for i in range(n):
        if out[i] == 0:
            out[i] = nxt
            nxt += 1
    return tuple(out)


def shuffle_words(a: Sequence[int], b: Sequence[int]) -> set[Perm]:
    """All interleavings of two words on disjoint alphabets.

    >>> sorted(shuffle_words((1, 3), (4, 2)))
    [(1, 3, 4, 2), (1, 4, 2, 3), (1, 4, 3, 2), (4, 1, 2, 3), (4, 1, 3, 2), (4, 2, 1, 3)]
    """
    if set(a) & set(b):
        raise ValueError("alphabets must be disjoint")
    m, n = len(a), len(b)
    out = set()
    for apos in combinations(range(m + n), m):
        word = [0] * (m + n)
        ai = iter(a)
        bi = iter(b)
        aset = set(apos)
        for i in range(m + n):
            word[i] = next(ai) if i in aset else next(bi)
        out.add(tuple(word))
    return out


def shuffle(pi: Sequence[int], sigma: Sequence[int]) -> set[Perm]:
    """Shifted shuffle of canonical permutations: interleave pi with sigma+|pi|."""
    check_canonical(pi)
    check_canonical(sigma)
    m = len(pi)
    return shuffle_words(tuple(pi), tuple(v + m for v in sigma))


def shuffle_sets(
    patterns: Iterable[Sequence[int]], patterns2: Iterable[Sequence[int]]
) -> frozenset[Perm]:
    """Union of pairwise shifted shuffles, deduplicated."""
    out: set[Perm] = set()
    ps2 = [tuple(p) for p in patterns2]
    for p in patterns:
        for q in ps2:
            out |= shuffle(p, q)
    return frozenset(out)


def partial_shuffle(j: int) -> frozenset[Perm]:
    """Interleavings of the word 1,2,...,j-2,j with the letter j-1, minus the identity.

    >>> sorted(partial_shuffle(4))
    [(1, 2, 4, 3), (1, 3, 2, 4), (3, 1, 2, 4)]
    """
    if j < 3:
        raise ValueError(f"partial shuffle needs j >= 3, got {j}")
    word = tuple(range(1, j - 1)) + (j,)
    out = shuffle_words(word, (j - 1,))
    out.discard(iota(j))
    return frozenset(out)


def contract(perm: Sequence[int], j: int) -> Perm:
    """Remove the entry at 1-based position j and standardize.

    >>> contract((5, 6, 1, 3, 4, 2), 5)
    (4, 5, 1, 3, 2)
    """
    if not 1 <= j <= len(perm):
        raise ValueError(f"position {j} out of range 1..{len(perm)}")
    return standardize(tuple(perm[: j - 1]) + tuple(perm[j:]))


def expand(perm: Sequence[int], j: int) -> Perm:
    """Insert perm[j]+1 directly after position j, shifting larger entries up.

    Inverse to contraction in the sense contract(expand(p, j), j + 1) == p.

    >>> expand((4, 5, 1, 3, 2), 4)
    (5, 6, 1, 3, 4, 2)
    """
    if not 1 <= j <= len(perm):
        raise ValueError(f"position {j} out of range 1..{len(perm)}")
    v = perm[j - 1]
    shifted = [w + 1 if w > v else w for w in perm]
    return tuple(shifted[:j]) + (v + 1,) + tuple(shifted[j:])


def is_comodal(seq: Sequence[int]) -> bool:
    """Strictly decreasing then strictly increasing (either side may be empty)."""
    i = 1
    while i < len(seq) and seq[i - 1] > seq[i]:
        i += 1
    while i < len(seq) and seq[i - 1] < seq[i]:
        i += 1
    return i >= len(seq)


def _block_bounds(alpha: Sequence[int], n: int) -> list[int]:
    if any(a < 1 for a in alpha):
        raise ValueError(f"composition parts must be positive: {alpha!r}")
    if sum(alpha) != n:
        raise ValueError(f"composition {alpha!r} does not sum to {n}")
    bounds, acc = [0], 0
    for a in alpha:
        acc += a
        bounds.append(acc)
    return bounds


def alpha_descent_set(perm: Sequence[int], alpha: Sequence[int]) -> frozenset[int]:
    """Descents of perm at global positions interior to the alpha blocks."""
    boundaries = set(_block_bounds(alpha, len(perm))[1:-1])
    return frozenset(i for i in descent_set(perm) if i not in boundaries)


def alpha_descent_number(perm: Sequence[int], alpha: Sequence[int]) -> int:
    return len(alpha_descent_set(perm, alpha))


def is_alpha_comodal(perm: Sequence[int], alpha: Sequence[int]) -> bool:
    """True if every alpha block of perm is comodal."""
    bounds = _block_bounds(alpha, len(perm))
    return all(
        is_comodal(perm[bounds[i] : bounds[i + 1]]) for i in range(len(alpha))
    )


def normalize_patterns(patterns: Iterable[Sequence[int]]) -> tuple[Perm, ...]:
    """Canonical, deduplicated, deterministically ordered pattern tuple."""
    seen: set[Perm] = set()
    for p in patterns:
        seen.add(check_canonical(p))
    return tuple(sorted(seen, key=lambda p: (len(p), p)))


def format_permutation(perm: Sequence[int]) -> str:
    if not perm:
        return "()"
    if max(perm) <= 9:
        return "".join(str(v) for v in perm)
    return ",".join(str(v) for v in perm)


def parse_permutation(text: str) -> Perm:
    """Parse the text form; accepts digit strings and comma-separated entries."""
    s = text.strip()
    if s in ("", "()"):
        return ()
    if "," in s:
        try:
            return tuple(int(tok) for tok in s.split(","))
        except ValueError:
            raise ValueError(f"bad permutation text: {text!r}") from None
    if not s.isdigit() or "0" in s:
        raise ValueError(f"bad permutation text: {text!r}")
    return tuple(int(ch) for ch in s)


def format_pattern_set(patterns: Iterable[Sequence[int]]) -> str:
    pats = normalize_patterns(patterns)
    texts = [format_permutation(p) for p in pats]
    sep = ";" if any("," in t for t in texts) else ","
    return sep.join(texts)


def parse_pattern_set(text: str) -> frozenset[Perm]:
    """Parse a pattern set: ';'-separated patterns, or ','-separated digit forms.

    Patterns with entries above 9 need the semicolon form, since their own
    entries are comma-separated.
    """
    s = text.strip()
    if not s:
        return frozenset()
    chunks = s.split(";") if ";" in s else s.split(",")
    pats = set()
    for chunk in chunks:
        p = parse_permutation(chunk)
        pats.add(check_canonical(p))
    return frozenset(pats)
