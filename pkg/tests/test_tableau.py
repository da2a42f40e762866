from collections import deque
from itertools import permutations
from math import factorial

import pytest

from conftest import all_perms
from qsympat.perm import delta, descent_set, inverse, iota, reverse
from qsympat.tableau import (
    column_reading_word,
    enumerate_partitions,
    enumerate_syt,
    f_lambda,
    fattened_hooks,
    format_tableau,
    hooks,
    is_superstandard_hook,
    knuth_aggregate,
    knuth_class,
    knuth_neighbors,
    nontrivial_hooks,
    parse_tableau,
    rsk,
    rsk_inverse,
    shape,
    superstandard,
    t_shapes,
    tableau_descents,
    transpose,
    transpose_partition,
    transpose_tableau,
)

PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_enumerate_partitions():
    assert enumerate_partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert enumerate_partitions(0) == ((),)
    for n, count in enumerate(PARTITION_COUNTS):
        assert len(enumerate_partitions(n)) == count


def test_shape_families():
    assert hooks(4) == ((4,), (3, 1), (2, 1, 1), (1, 1, 1, 1))
    assert (3, 3) not in fattened_hooks(6, 3)
    assert (2, 2, 2) in fattened_hooks(6, 3)
    assert len(fattened_hooks(6, 3)) == 10
    assert fattened_hooks(5, 2) == hooks(5)
    assert nontrivial_hooks(4) == ((3, 1), (2, 1, 1))
    assert t_shapes(5) == ((3, 2), (2, 2, 1))
    assert t_shapes(4) == ((2, 2),)
    assert t_shapes(3) == ()
    with pytest.raises(ValueError):
        fattened_hooks(4, 1)


def test_transpose_partition():
    assert transpose_partition((2, 1)) == (2, 1)
    assert transpose_partition((3, 1)) == (2, 1, 1)
    assert transpose_partition(()) == ()
    for lam in enumerate_partitions(7):
        assert transpose_partition(transpose_partition(lam)) == lam


def test_f_lambda_known_values():
    assert f_lambda((2, 1)) == 2
    assert f_lambda((3, 2)) == 5
    assert f_lambda((6,)) == 1
    assert f_lambda((1, 1, 1, 1, 1, 1)) == 1
    assert f_lambda(()) == 1


def test_f_lambda_matches_enumeration():
    for n in range(11):
        for lam in enumerate_partitions(n):
            assert len(enumerate_syt(lam)) == f_lambda(lam)


def test_rsk_square_sum():
    for n in range(9):
        assert sum(f_lambda(lam) ** 2 for lam in enumerate_partitions(n)) == factorial(n)


def test_enumerate_syt_order():
    tabs = enumerate_syt((2, 1))
    assert tabs == (((1, 2), (3,)), ((1, 3), (2,)))
    assert enumerate_syt((4,)) == ((tuple(range(1, 5)),),)


def test_tableau_descents():
    p = ((1, 2, 5, 9), (3, 4, 7), (6, 8))
    assert tableau_descents(p) == frozenset({2, 5, 7})
    assert tableau_descents((tuple(range(1, 8)),)) == frozenset()
    for lam in enumerate_partitions(6):
        row = superstandard(lam, "row")
        prefix_sums = set()
        acc = 0
        for part in lam[:-1]:
            acc += part
            prefix_sums.add(acc)
        assert tableau_descents(row) == frozenset(prefix_sums)


def test_rsk_examples():
    assert rsk((1, 3, 2)) == (((1, 2), (3,)), ((1, 2), (3,)))
    assert rsk((3, 1, 2)) == (((1, 2), (3,)), ((1, 3), (2,)))
    assert rsk(iota(5)) == ((tuple(range(1, 6)),), (tuple(range(1, 6)),))
    assert rsk(()) == ((), ())


def test_rsk_round_trip():
    for n in range(7):
        for perm in permutations(range(1, n + 1)):
            p, q = rsk(perm)
            assert shape(p) == shape(q)
            assert rsk_inverse(p, q) == perm


def test_rsk_inverse_shape_mismatch():
    with pytest.raises(ValueError):
        rsk_inverse(((1, 2), (3,)), ((1, 2, 3),))


def test_rsk_properties():
    for n in range(6):
        for perm in permutations(range(1, n + 1)):
            p, q = rsk(perm)
            assert descent_set(perm) == tableau_descents(q)
            assert rsk(reverse(perm))[0] == transpose_tableau(p)
            assert rsk(inverse(perm)) == (q, p)
            # first row length is the longest increasing subsequence
            lis = max(
                (len(s) for s in _increasing_subsequences(perm)), default=0
            )
            assert (shape(p)[0] if shape(p) else 0) == lis


def _increasing_subsequences(perm):
    from itertools import combinations

    for k in range(len(perm), 0, -1):
        found = False
        for sub in combinations(perm, k):
            if all(sub[i] < sub[i + 1] for i in range(k - 1)):
                found = True
                yield sub
        if found:
            return
    yield ()


def test_knuth_class_examples():
    assert knuth_class(((1, 2), (3,))) == frozenset({(1, 3, 2), (3, 1, 2)})
    assert knuth_class(((1, 3), (2,))) == frozenset({(2, 1, 3), (2, 3, 1)})
    assert knuth_aggregate((2, 1)) == frozenset(
        {(1, 3, 2), (3, 1, 2), (2, 1, 3), (2, 3, 1)}
    )
    for lam in enumerate_partitions(5):
        assert len(knuth_aggregate(lam)) == f_lambda(lam) ** 2
        for p in enumerate_syt(lam):
            cls = knuth_class(p)
            assert len(cls) == f_lambda(lam)
            assert all(rsk(x)[0] == p for x in cls)


def test_knuth_neighbors():
    assert knuth_neighbors((1, 3, 2)) == frozenset({(3, 1, 2)})
    assert knuth_neighbors((2, 1, 3)) == frozenset({(2, 3, 1)})
    assert knuth_neighbors(iota(5)) == frozenset()
    for perm in all_perms(5):
        for nb in knuth_neighbors(perm):
            assert perm in knuth_neighbors(nb)
            assert rsk(nb)[0] == rsk(perm)[0]


def test_knuth_classes_connected_under_moves():
    for n in range(1, 7):
        for lam in enumerate_partitions(n):
            for p in enumerate_syt(lam):
                cls = knuth_class(p)
                start = column_reading_word(p)
                seen = {start}
                frontier = deque([start])
                while frontier:
                    cur = frontier.popleft()
                    for nb in knuth_neighbors(cur):
                        if nb not in seen:
                            seen.add(nb)
                            frontier.append(nb)
                assert seen == cls


def test_superstandard():
    assert superstandard((2, 1), "row") == ((1, 2), (3,))
    assert superstandard((2, 1), "column") == ((1, 3), (2,))
    assert superstandard((3, 2), "column") == ((1, 3, 5), (2, 4))
    with pytest.raises(ValueError):
        superstandard((2, 1), "diagonal")
    assert is_superstandard_hook(((1, 2), (3,)))
    assert is_superstandard_hook(((1, 3), (2,)))
    assert not is_superstandard_hook(superstandard((2, 2), "row"))
    assert not is_superstandard_hook(((1, 2, 4), (3,)))
    assert is_superstandard_hook((tuple(range(1, 6)),))


def test_column_reading_word():
    assert column_reading_word(((1, 2), (3,))) == (3, 1, 2)
    assert column_reading_word(((1, 3), (2,))) == (2, 1, 3)
    assert column_reading_word(tuple((i,) for i in range(1, 6))) == delta(5)
    for n in range(7):
        for lam in enumerate_partitions(n):
            for p in enumerate_syt(lam):
                assert rsk(column_reading_word(p))[0] == p


def test_transpose_tableau():
    for n in range(7):
        full = frozenset(range(1, n))
        for lam in enumerate_partitions(n):
            assert transpose(superstandard(lam, "row")) == superstandard(
                transpose_partition(lam), "column"
            )
            for p in enumerate_syt(lam):
                assert shape(transpose_tableau(p)) == transpose_partition(lam)
                assert transpose_tableau(transpose_tableau(p)) == p
                assert tableau_descents(transpose_tableau(p)) == full - tableau_descents(p)
    assert transpose((3, 1)) == (2, 1, 1)


def test_tableau_text_forms():
    assert format_tableau(((1, 2), (3,))) == "12/3"
    assert parse_tableau("12/3") == ((1, 2), (3,))
    big = superstandard((6, 5), "row")
    assert parse_tableau(format_tableau(big)) == big
    with pytest.raises(ValueError):
        parse_tableau("13/2/2")
    with pytest.raises(ValueError):
        parse_tableau("21/3")
