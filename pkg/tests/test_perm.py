from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from conftest import all_perms, brute_contains
from qsympat.perm import (
    alpha_descent_number,
    avoids_all,
    complement,
    composition_to_descents,
    contains,
    contains_using_last,
    contract,
    delta,
    descent_composition,
    descent_set,
    descents_to_composition,
    expand,
    format_pattern_set,
    format_permutation,
    increasing_runs,
    inverse,
    iota,
    is_alpha_comodal,
    is_comodal,
    parse_pattern_set,
    parse_permutation,
    partial_shuffle,
    perm_with_descent_set,
    reverse,
    rot180,
    shuffle,
    shuffle_sets,
    shuffle_words,
    standardize,
)

perms_st = st.integers(min_value=0, max_value=6).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))
)


def test_standardize():
    assert standardize((5, 7, 4)) == (2, 3, 1)
    assert standardize((1, 2, 3)) == (1, 2, 3)
    assert standardize((90, 10, 50)) == (3, 1, 2)
    assert standardize(()) == ()
    with pytest.raises(ValueError):
        standardize((2, 2, 1))


def test_contains_examples():
    assert contains((5, 1, 3, 2, 7, 4, 6), (2, 3, 1))
    assert contains((4, 1, 3, 2), (4, 1, 3, 2))
    assert not contains((1, 2, 3, 4, 5, 6), (3, 2, 1))
    assert contains((1, 2), ())


@given(perms_st, st.integers(min_value=1, max_value=4).flatmap(
    lambda k: st.permutations(list(range(1, k + 1)))
))
def test_contains_matches_brute_force(sigma, pat):
    assert contains(tuple(sigma), tuple(pat)) == brute_contains(sigma, tuple(pat))


@given(perms_st, st.integers(min_value=1, max_value=4).flatmap(
    lambda k: st.permutations(list(range(1, k + 1)))
))
def test_contains_using_last_is_incremental(sigma, pat):
    # containment == some prefix witnesses an occurrence at its last spot
    sigma, pat = tuple(sigma), tuple(pat)
    incremental = any(
        contains_using_last(sigma[:i], pat) for i in range(1, len(sigma) + 1)
    )
    assert incremental == contains(sigma, pat)


def test_avoids_all():
    assert avoids_all((2, 1, 3), [(1, 3, 2), (3, 1, 2)])
    assert avoids_all((3, 1, 2), [])
    assert not avoids_all((1, 3, 2), [(1, 3, 2), (3, 1, 2)])


def test_descent_set():
    assert descent_set((3, 5, 7, 1, 6, 8, 2, 4)) == frozenset({3, 6})
    assert descent_set(iota(6)) == frozenset()
    assert descent_set(delta(6)) == frozenset({1, 2, 3, 4, 5})


def test_increasing_runs():
    assert increasing_runs((5, 6, 1, 3, 4, 2)) == [(5, 6), (1, 3, 4), (2,)]
    assert descent_composition((5, 6, 1, 3, 4, 2)) == (2, 3, 1)
    assert increasing_runs(iota(5)) == [(1, 2, 3, 4, 5)]
    assert descent_composition(delta(3)) == (1, 1, 1)
    assert increasing_runs(()) == []


def test_composition_descent_round_trip():
    for n in range(9):
        for mask in range(1 << max(n - 1, 0)):
            positions = frozenset(p for p in range(1, n) if mask >> (p - 1) & 1)
            alpha = descents_to_composition(positions, n)
            assert sum(alpha) == n
            assert composition_to_descents(alpha) == positions


def test_dihedral_examples():
    sigma = (3, 5, 7, 1, 6, 8, 2, 4)
    assert complement(sigma) == (6, 4, 2, 8, 3, 1, 7, 5)
    assert reverse(sigma) == (4, 2, 8, 6, 1, 7, 5, 3)
    assert inverse(iota(5)) == iota(5)
    assert rot180(sigma) == complement(reverse(sigma)) == reverse(complement(sigma))


@given(perms_st)
def test_dihedral_involutions(perm):
    perm = tuple(perm)
    assert complement(complement(perm)) == perm
    assert reverse(reverse(perm)) == perm
    assert inverse(inverse(perm)) == perm
    assert rot180(rot180(perm)) == perm


def test_complement_flips_descents():
    for n in range(1, 7):
        full = frozenset(range(1, n))
        for p in permutations(range(1, n + 1)):
            assert descent_set(complement(p)) == full - descent_set(p)


def test_shuffle_words_example():
    assert shuffle_words((1, 3), (4, 2)) == {
        (1, 3, 4, 2),
        (1, 4, 3, 2),
        (1, 4, 2, 3),
        (4, 1, 3, 2),
        (4, 1, 2, 3),
        (4, 2, 1, 3),
    }
    with pytest.raises(ValueError):
        shuffle_words((1, 2), (2, 3))


def test_shuffle_offsets_second_word():
    assert shuffle((1, 2), (2, 1)) == {
        (1, 2, 4, 3),
        (1, 4, 2, 3),
        (1, 4, 3, 2),
        (4, 1, 2, 3),
        (4, 1, 3, 2),
        (4, 3, 1, 2),
    }
    assert shuffle((1,), (1,)) == {(1, 2), (2, 1)}


@given(
    st.integers(min_value=0, max_value=4).flatmap(lambda n: st.permutations(list(range(1, n + 1)))),
    st.integers(min_value=0, max_value=4).flatmap(lambda n: st.permutations(list(range(1, n + 1)))),
)
def test_shuffle_cardinality(a, b):
    from math import comb

    a, b = tuple(a), tuple(b)
    assert len(shuffle(a, b)) == comb(len(a) + len(b), len(a))


def test_shuffle_sets():
    assert shuffle_sets({(1,)}, {(1, 3, 2), (3, 1, 2)}) == parse_pattern_set(
        "1243,1423,2143,4123,2413,4213,2431,4231"
    )
    assert shuffle_sets(set(), {(1, 2)}) == frozenset()
    assert shuffle_sets({(1, 2)}, {(1,)}) == parse_pattern_set("123,132,312")


def test_partial_shuffle():
    assert partial_shuffle(3) == parse_pattern_set("132,213")
    assert partial_shuffle(4) == parse_pattern_set("1243,1324,3124")
    # interleavings of 1235 with 4, identity dropped
    assert partial_shuffle(5) == parse_pattern_set("12354,12435,14235,41235")
    for j in range(3, 8):
        assert len(partial_shuffle(j)) == j - 1
        assert all(len(p) == j for p in partial_shuffle(j))
    with pytest.raises(ValueError):
        partial_shuffle(2)


def test_contract_expand_examples():
    assert contract((5, 6, 1, 3, 4, 2), 5) == (4, 5, 1, 3, 2)
    assert expand((4, 5, 1, 3, 2), 4) == (5, 6, 1, 3, 4, 2)
    with pytest.raises(ValueError):
        contract((1, 2), 3)
    with pytest.raises(ValueError):
        expand((1, 2), 0)


def test_contract_expand_inverse():
    for perm in all_perms(5):
        for j in range(1, 6):
            assert contract(expand(perm, j), j + 1) == perm


def test_comodal():
    assert is_comodal((3, 1, 2))
    assert is_comodal(iota(4))
    assert is_comodal(delta(4))
    assert is_comodal(())
    assert not is_comodal((1, 3, 2))
    assert not is_comodal((2, 1, 4, 3))


def test_alpha_descents():
    assert alpha_descent_number((3, 1, 4, 2), (2, 2)) == 2
    assert alpha_descent_number((3, 1, 4, 2), (4,)) == 2
    assert alpha_descent_number((3, 1, 4, 2), (1, 1, 1, 1)) == 0
    assert is_alpha_comodal((1, 3, 2, 4), (2, 2))  # blocks 13 and 24
    assert not is_alpha_comodal((1, 3, 2, 4), (3, 1))  # block 132 is not comodal
    with pytest.raises(ValueError):
        alpha_descent_number((2, 1, 3), (2, 2))


def test_run_structure_of_avoiders():
    # runs of length >= 2 in {1243, 3124}-avoiders are a, b, b+1, ..., b+k
    from qsympat.avoid import iter_avoiders

    pats = [(1, 2, 4, 3), (3, 1, 2, 4)]
    for n in range(1, 8):
        for perm in iter_avoiders(n, pats):
            for run in increasing_runs(perm):
                if len(run) >= 2:
                    tail = run[1:]
                    assert all(
                        tail[i + 1] == tail[i] + 1 for i in range(len(tail) - 1)
                    )


def test_perm_with_descent_set():
    for n in range(8):
        for mask in range(1 << max(n - 1, 0)):
            positions = frozenset(p for p in range(1, n) if mask >> (p - 1) & 1)
            perm = perm_with_descent_set(positions, n)
            assert descent_set(perm) == positions


def test_text_forms():
    assert format_permutation((3, 5, 7, 1, 6, 8, 2, 4)) == "35716824"
    assert parse_permutation("35716824") == (3, 5, 7, 1, 6, 8, 2, 4)
    big = tuple([10, 2, 1] + list(range(3, 10)))
    assert parse_permutation(format_permutation(big)) == big
    assert parse_permutation("()") == ()
    assert format_permutation(()) == "()"
    with pytest.raises(ValueError):
        parse_permutation("102")
    assert parse_pattern_set("") == frozenset()
    assert parse_pattern_set("132,312") == frozenset({(1, 3, 2), (3, 1, 2)})
    assert parse_pattern_set("132;312") == frozenset({(1, 3, 2), (3, 1, 2)})
    two = frozenset({tuple([10] + list(range(1, 10))), (2, 1)})
    assert parse_pattern_set(format_pattern_set(two)) == two
    with pytest.raises(ValueError):
        parse_pattern_set("122")
