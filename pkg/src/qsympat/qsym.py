"""Degree-graded quasisymmetric and symmetric elements with exact integers.

QSymElement holds a homogeneous degree-n element in the fundamental basis,
keyed by descent sets (frozensets of positions in 1..n-1).  SymElement holds
a degree-n element in the Schur basis, keyed by partitions.  All arithmetic
is exact; the change of basis to Schur coefficients is solved over rationals
and asserted integral.

Products of fundamentals go through shuffles of descent-class representative
permutations, which realizes the quasisymmetric product without ever leaving
integer coefficients.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Mapping, Sequence, Union

from .perm import (
    Perm,
    alpha_descent_number,
    descent_set,
    is_alpha_comodal,
    perm_with_descent_set,
    shuffle_words,
)
from .tableau import (
    Partition,
    check_partition,
    enumerate_partitions,
    enumerate_syt,
    tableau_descents,
    transpose_partition,
)

__all__ = [
    "QSymElement",
    "SymElement",
    "NotInSpan",
    "f_of_permutation_set",
    "schur_to_fundamental",
    "is_symmetric",
    "to_schur",
    "is_schur_nonnegative",
    "transpose_schur",
    "pieri_s1",
    "pieri_difference",
    "mn_character",
    "fine_character",
    "descent_statistics",
    "set_statistics_cache_dir",
    "qsym_to_dict",
    "qsym_from_dict",
    "sym_to_dict",
    "sym_from_dict",
]


def _descents_key(s: frozenset[int]) -> tuple[int, ...]:
    return tuple(sorted(s))


@dataclass(frozen=True)
class QSymElement:
    """Integer combination of fundamental quasisymmetric functions F_S."""

    grade: int
    coeffs: Mapping[frozenset[int], int] = field(default_factory=dict)

    def __post_init__(self):
        if self.grade < 0:
            raise ValueError(f"grade must be nonnegative, got {self.grade}")
        clean = {}
        for s, c in self.coeffs.items():
            s = frozenset(s)
            if any(not 1 <= p <= self.grade - 1 for p in s):
                raise ValueError(f"descents {sorted(s)} out of range at grade {self.grade}")
            if c:
                clean[s] = int(c)
        object.__setattr__(self, "coeffs", clean)

    @staticmethod
    def zero(grade: int) -> "QSymElement":
        return QSymElement(grade, {})

    @staticmethod
    def fundamental(grade: int, descents: Iterable[int] = ()) -> "QSymElement":
        return QSymElement(grade, {frozenset(descents): 1})

    def coefficient(self, descents: Iterable[int]) -> int:
        return self.coeffs.get(frozenset(descents), 0)

    @property
    def mass(self) -> int:
        """Sum of all coefficients."""
        return sum(self.coeffs.values())

    def is_zero(self) -> bool:
        return not self.coeffs

    def _require_same_grade(self, other: "QSymElement") -> None:
        if self.grade != other.grade:
            raise ValueError(f"grade mismatch: {self.grade} vs {other.grade}")

    def __add__(self, other: "QSymElement") -> "QSymElement":
        self._require_same_grade(other)
        out = dict(self.coeffs)
        for s, c in other.coeffs.items():
            out[s] = out.get(s, 0) + c
        return QSymElement(self.grade, out)

    def __neg__(self) -> "QSymElement":
        return QSymElement(self.grade, {s: -c for s, c in self.coeffs.items()})

    def __sub__(self, other: "QSymElement") -> "QSymElement":
        return self + (-other)

    def __mul__(self, other: Union[int, "QSymElement"]) -> "QSymElement":
        if isinstance(other, int):
            return QSymElement(self.grade, {s: c * other for s, c in self.coeffs.items()})
        out: dict[frozenset[int], int] = {}
        for s, cs in self.coeffs.items():
            for t, ct in other.coeffs.items():
                for u, mult in _fundamental_product(
                    self.grade, _descents_key(s), other.grade, _descents_key(t)
                ):
                    out[u] = out.get(u, 0) + cs * ct * mult
        return QSymElement(self.grade + other.grade, out)

    def __rmul__(self, other: int) -> "QSymElement":
        return self * other

    def __str__(self) -> str:
        return _format_terms(
            sorted(self.coeffs.items(), key=lambda kv: _descents_key(kv[0])),
            lambda s: "F[" + ",".join(str(p) for p in sorted(s)) + "]",
        )


@dataclass(frozen=True)
class SymElement:
    """Integer combination of Schur functions s_lambda."""

    grade: int
    coeffs: Mapping[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.grade < 0:
            raise ValueError(f"grade must be nonnegative, got {self.grade}")
        clean = {}
        for lam, c in self.coeffs.items():
            lam = check_partition(lam)
            if sum(lam) != self.grade:
                raise ValueError(f"partition {lam} is not of size {self.grade}")
            if c:
                clean[lam] = int(c)
        object.__setattr__(self, "coeffs", clean)

    @staticmethod
    def zero(grade: int) -> "SymElement":
        return SymElement(grade, {})

    @staticmethod
    def schur(lam: Sequence[int]) -> "SymElement":
        lam = check_partition(lam)
        return SymElement(sum(lam), {lam: 1})

    def coefficient(self, lam: Sequence[int]) -> int:
        return self.coeffs.get(tuple(lam), 0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def _require_same_grade(self, other: "SymElement") -> None:
        if self.grade != other.grade:
            raise ValueError(f"grade mismatch: {self.grade} vs {other.grade}")

    def __add__(self, other: "SymElement") -> "SymElement":
        self._require_same_grade(other)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SymElement(self.grade, out)

    def __neg__(self) -> "SymElement":
        return SymElement(self.grade, {lam: -c for lam, c in self.coeffs.items()})

    def __sub__(self, other: "SymElement") -> "SymElement":
        return self + (-other)

    def __mul__(self, other: int) -> "SymElement":
        return SymElement(self.grade, {lam: c * other for lam, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __str__(self) -> str:
        return _format_terms(
            sorted(self.coeffs.items(), key=lambda kv: kv[0], reverse=True),
            lambda lam: "s[" + ",".join(str(a) for a in lam) + "]",
        )


@dataclass(frozen=True)
class NotInSpan:
    """Outcome of to_schur on an element outside the span of Schur functions."""

    witness: frozenset[int]
    residual: Fraction

    def __str__(self) -> str:
        return (
            f"not in Schur span: residual {self.residual} at "
            f"descent set {sorted(self.witness)}"
        )


def _format_terms(items, key_fmt) -> str:
    if not items:
        return "0"
    pieces = []
    for k, c in items:
        term = key_fmt(k) if abs(c) == 1 else f"{abs(c)}*{key_fmt(k)}"
        if not pieces:
            pieces.append(term if c > 0 else f"-{term}")
        else:
            pieces.append(("+ " if c > 0 else "- ") + term)
    return " ".join(pieces)


@lru_cache(maxsize=None)
def _fundamental_product(
    m: int, s_key: tuple[int, ...], n: int, t_key: tuple[int, ...]
) -> tuple[tuple[frozenset[int], int], ...]:
    # F_S * F_T expands over shuffles of any two representatives with those
    # descent sets, by the shuffle-product homomorphism onto QSym.
    u = perm_with_descent_set(s_key, m)
    v = perm_with_descent_set(t_key, n)
    tally: Counter[frozenset[int]] = Counter()
    for w in shuffle_words(u, tuple(x + m for x in v)):
        tally[descent_set(w)] += 1
    return tuple(sorted(tally.items(), key=lambda kv: _descents_key(kv[0])))


def f_of_permutation_set(
    perms: Iterable[Perm], grade: int | None = None
) -> QSymElement:
    """Sum of F over the descent sets of a same-size set of permutations."""
    tally: Counter[frozenset[int]] = Counter()
    size = grade
    for p in perms:
        if size is None:
            size = len(p)
        elif len(p) != size:
            raise ValueError(f"mixed sizes: expected {size}, got {p!r}")
        tally[descent_set(p)] += 1
    if size is None:
        raise ValueError("empty set needs an explicit grade")
    return QSymElement(size, tally)


def schur_to_fundamental(lam: Sequence[int]) -> QSymElement:
    """Fundamental expansion of a Schur function over tableau descent sets."""
    lam = check_partition(lam)
    tally: Counter[frozenset[int]] = Counter()
    for p in enumerate_syt(lam):
        tally[tableau_descents(p)] += 1
    return QSymElement(sum(lam), tally)


# ---------------------------------------------------------------------------
# descent statistics per grade, with optional on-disk JSON cache

_stats_memo: dict[int, dict[Partition, dict[frozenset[int], int]]] = {}
_stats_cache_dir: Path | None = None
_STATS_VERSION = 1


def set_statistics_cache_dir(path: str | Path | None) -> None:
    """Point the per-grade descent-statistics cache at a directory (or disable)."""
    global _stats_cache_dir
    _stats_cache_dir = Path(path) if path is not None else None


def _stats_path(n: int) -> Path | None:
    if _stats_cache_dir is None:
        return None
    return _stats_cache_dir / f"syt-descents-n{n}.json"


def _load_stats(n: int) -> dict[Partition, dict[frozenset[int], int]] | None:
    path = _stats_path(n)
    if path is None or not path.is_file():
        return None
    try:
        blob = json.loads(path.read_text())
        if blob.get("version") != _STATS_VERSION or blob.get("grade") != n:
            return None
        out = {}
        for entry in blob["stats"]:
            lam = tuple(entry["partition"])
            out[lam] = {
                frozenset(ds): int(c) for ds, c in entry["descent_counts"]
            }
        return out
    except (OSError, ValueError, KeyError, TypeError):
        return None


def _store_stats(n: int, stats: dict[Partition, dict[frozenset[int], int]]) -> None:
    path = _stats_path(n)
    if path is None:
        return
    blob = {
        "version": _STATS_VERSION,
        "grade": n,
        "stats": [
            {
                "partition": list(lam),
                "descent_counts": [
                    [sorted(s), c]
                    for s, c in sorted(counts.items(), key=lambda kv: _descents_key(kv[0]))
                ],
            }
            for lam, counts in stats.items()
        ],
    }
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(blob))
    except OSError:
        pass  # cache is best effort


def descent_statistics(n: int) -> dict[Partition, dict[frozenset[int], int]]:
    """For each partition of n, the tally of tableau descent sets."""
    if n in _stats_memo:
        return _stats_memo[n]
    stats = _load_stats(n)
    if stats is None:
        stats = {}
        for lam in enumerate_partitions(n):
            tally: Counter[frozenset[int]] = Counter()
            for p in enumerate_syt(lam):
                tally[tableau_descents(p)] += 1
            stats[lam] = dict(tally)
        _store_stats(n, stats)
    _stats_memo[n] = stats
    return stats


# ---------------------------------------------------------------------------
# symmetry and the Schur expansion


def _composition_of_mask(mask: int, n: int) -> tuple[int, ...]:
    parts = []
    prev = 0
    for p in range(1, n):
        if mask >> (p - 1) & 1:
            parts.append(p - prev)
            prev = p
    parts.append(n - prev)
    return tuple(parts)


def is_symmetric(q: QSymElement) -> bool:
    """Decide symmetry via the monomial-basis coefficients.

    The monomial coefficient at a composition is the subset sum of the
    fundamental coefficients; the element is symmetric exactly when these
    are constant on compositions with equal part multisets.
    """
    n = q.grade
    if n == 0:
        return True
    size = 1 << (n - 1)
    cm = [0] * size
    for s, c in q.coeffs.items():
        cm[sum(1 << (p - 1) for p in s)] = c
    for b in range(n - 1):
        bit = 1 << b
        for m in range(size):
            if m & bit:
                cm[m] += cm[m ^ bit]
    seen: dict[tuple[int, ...], int] = {}
    for mask in range(size):
        key = tuple(sorted(_composition_of_mask(mask, n)))
        if key in seen:
            if seen[key] != cm[mask]:
                return False
        else:
            seen[key] = cm[mask]
    return True


def _subsets_in_order(n: int) -> list[frozenset[int]]:
    subsets = [frozenset(_mask_positions(m)) for m in range(1 << max(n - 1, 0))]
    subsets.sort(key=_descents_key)
    return subsets


def _mask_positions(mask: int):
    p = 1
    while mask:
        if mask & 1:
            yield p
        mask >>= 1
        p += 1


def to_schur(q: QSymElement) -> SymElement | NotInSpan:
    """Exact Schur coefficients of a symmetric element, else NotInSpan.

    Solves sum_lambda c_lambda * #{P in SYT(lambda) : Des P = S} = q(S) by
    Gauss-Jordan elimination over rationals, then verifies every equation;
    the first violated descent set (in canonical order) becomes the witness.
    """
    n = q.grade
    lams = list(enumerate_partitions(n))
    stats = descent_statistics(n)
    subsets = _subsets_in_order(n)

    pivots: list[tuple[list[Fraction], Fraction, int]] = []
    for s in subsets:
        row = [Fraction(stats[lam].get(s, 0)) for lam in lams]
        rhs = Fraction(q.coefficient(s))
        for prow, prhs, pc in pivots:
            f = row[pc]
            if f:
                row = [a - f * b for a, b in zip(row, prow)]
                rhs -= f * prhs
        pc = next((i for i, a in enumerate(row) if a), None)
        if pc is None:
            continue
        lead = row[pc]
        row = [a / lead for a in row]
        rhs /= lead
        for k, (prow, prhs, opc) in enumerate(pivots):
            f = prow[pc]
            if f:
                pivots[k] = (
                    [a - f * b for a, b in zip(prow, row)],
                    prhs - f * rhs,
                    opc,
                )
        pivots.append((row, rhs, pc))
        if len(pivots) == len(lams):
            break
    if len(pivots) < len(lams):
        raise RuntimeError("descent statistics matrix lost column rank")

    c = {lams[pc]: rhs for _, rhs, pc in pivots}
    support = [(lam, c[lam]) for lam in lams if c[lam]]
    for s in subsets:
        lhs = sum(cv * stats[lam].get(s, 0) for lam, cv in support)
        if lhs != q.coefficient(s):
            return NotInSpan(s, q.coefficient(s) - lhs)
    coeffs = {}
    for lam, cv in support:
        assert cv.denominator == 1, f"non-integral Schur coefficient {cv} at {lam}"
        coeffs[lam] = int(cv)
    return SymElement(n, coeffs)


def is_schur_nonnegative(s: SymElement) -> bool:
    return all(c >= 0 for c in s.coeffs.values())


def transpose_schur(s: SymElement) -> SymElement:
    """Apply the transpose to every indexing partition."""
    return SymElement(
        s.grade, {transpose_partition(lam): c for lam, c in s.coeffs.items()}
    )


def _add_box_shapes(lam: Partition):
    for i in range(len(lam)):
        if i == 0 or lam[i] < lam[i - 1]:
            yield lam[:i] + (lam[i] + 1,) + lam[i + 1 :]
    yield lam + (1,)


def pieri_s1(s: SymElement) -> SymElement:
    """Multiply by the degree-one Schur function: add one box in all ways."""
    out: dict[Partition, int] = {}
    for lam, c in s.coeffs.items():
        for mu in _add_box_shapes(lam):
            out[mu] = out.get(mu, 0) + c
    return SymElement(s.grade + 1, out)


def pieri_difference(g_prev: SymElement, g_cur: SymElement) -> SymElement:
    """The difference s_1 * g_prev - g_cur, with d_lambda = sum over removals minus c_lambda."""
    if g_prev.grade + 1 != g_cur.grade:
        raise ValueError(
            f"grades must be consecutive: {g_prev.grade} and {g_cur.grade}"
        )
    return pieri_s1(g_prev) - g_cur


# ---------------------------------------------------------------------------
# characters


def _partition_from_beta(beta: list[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    ell = len(beta)
    parts = tuple(b - (ell - 1 - i) for i, b in enumerate(beta))
    return tuple(a for a in parts if a > 0)


@lru_cache(maxsize=None)
def _mn(lam: Partition, alpha: tuple[int, ...]) -> int:
    if not alpha:
        return 1
    k = alpha[0]
    rest = alpha[1:]
    ell = len(lam)
    beta = [lam[i] + (ell - 1 - i) for i in range(ell)]
    beta_set = set(beta)
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for x in beta if nb < x < b)
        mu = _partition_from_beta([x for x in beta if x != b] + [nb])
        total += (-1) ** height * _mn(mu, rest)
    return total


def mn_character(lam: Sequence[int], alpha: Sequence[int]) -> int:
    """Irreducible character value at the class of cycle type alpha.

    Computed by recursive border-strip removal; the value depends only on
    the multiset of parts of alpha.
    """
    lam = check_partition(lam)
    if any(a < 1 for a in alpha):
        raise ValueError(f"composition parts must be positive: {alpha!r}")
    if sum(lam) != sum(alpha):
        raise ValueError(f"size mismatch: |{lam}| != |{tuple(alpha)}|")
    return _mn(lam, tuple(alpha))


def fine_character(perms: Iterable[Perm], alpha: Sequence[int]) -> int:
    """Signed count of block-comodal permutations, the fine-set statistic."""
    n = sum(alpha)
    total = 0
    for p in perms:
        if len(p) != n:
            raise ValueError(f"size mismatch: {p!r} vs composition of {n}")
        if is_alpha_comodal(p, alpha):
            total += (-1) ** alpha_descent_number(p, alpha)
    return total


# ---------------------------------------------------------------------------
# JSON forms


def qsym_to_dict(q: QSymElement) -> dict:
    """Schema: {"grade": n, "terms": [{"descents": [...], "coeff": c}, ...]}."""
    return {
        "grade": q.grade,
        "terms": [
            {"descents": sorted(s), "coeff": c}
            for s, c in sorted(q.coeffs.items(), key=lambda kv: _descents_key(kv[0]))
        ],
    }


def qsym_from_dict(blob: Mapping) -> QSymElement:
    return QSymElement(
        int(blob["grade"]),
        {frozenset(t["descents"]): int(t["coeff"]) for t in blob["terms"]},
    )


def sym_to_dict(s: SymElement) -> dict:
    """Schema: {"grade": n, "terms": [{"partition": [...], "coeff": c}, ...]} reverse-lex."""
    return {
        "grade": s.grade,
        "terms": [
            {"partition": list(lam), "coeff": c}
            for lam, c in sorted(s.coeffs.items(), key=lambda kv: kv[0], reverse=True)
        ],
    }


def sym_from_dict(blob: Mapping) -> SymElement:
    return SymElement(
        int(blob["grade"]),
        {tuple(t["partition"]): int(t["coeff"]) for t in blob["terms"]},
    )
