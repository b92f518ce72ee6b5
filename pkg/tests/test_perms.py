from itertools import combinations, permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bestchoice.perms import (
    PatternId,
    Permutation,
    contains_pattern,
    contains_pattern_scan,
    is_k_winnable,
    left_to_right_maxima,
    play_positional,
    prefix_signature,
    standardize,
    winnable_interval,
)

EXAMPLE = Permutation.parse("574239618")


def perms_up_to(n_max):
    for n in range(1, n_max + 1):
        yield from permutations(range(1, n + 1))


small_perms = st.integers(1, 9).flatmap(lambda n: st.permutations(list(range(1, n + 1))))


def test_parse_forms_agree():
    assert Permutation.parse("5 7 4 2 3 9 6 1 8") == EXAMPLE
    assert Permutation.parse("5,7,4,2,3,9,6,1,8") == EXAMPLE
    assert str(Permutation(range(1, 12))) == "1 2 3 4 5 6 7 8 9 10 11"


@pytest.mark.parametrize("bad", [(), (1, 1), (2, 3), (0, 1)])
def test_invalid_permutations_rejected(bad):
    with pytest.raises(ValueError):
        Permutation(bad)


def test_contains_pattern_examples():
    assert contains_pattern(EXAMPLE, PatternId.P321)
    assert contains_pattern_scan((7, 4, 3), PatternId.P321)
    assert not contains_pattern(Permutation.parse("123"), PatternId.P321)
    assert not contains_pattern(Permutation.parse("41728356"), PatternId.P321)
    assert not contains_pattern_scan(Permutation.parse("41728356"), PatternId.P321)


def test_fast_containment_matches_triple_scan_exhaustively():
    for p in perms_up_to(7):
        for q in PatternId:
            assert contains_pattern(p, q) == contains_pattern_scan(p, q), (p, q)


@given(small_perms, st.sampled_from(list(PatternId)))
def test_fast_containment_matches_triple_scan(p, q):
    assert contains_pattern(p, q) == contains_pattern_scan(p, q)


@given(small_perms, st.sampled_from(list(PatternId)))
def test_containment_witness_is_order_isomorphic(p, q):
    witnesses = [t for t in combinations(p, 3) if standardize(t) == q.value]
    assert bool(witnesses) == contains_pattern(p, q)


def test_left_to_right_maxima_examples():
    assert left_to_right_maxima(EXAMPLE) == [(1, 5), (2, 7), (6, 9)]
    assert left_to_right_maxima(Permutation.parse("41728356")) == [(1, 4), (3, 7), (5, 8)]
    assert left_to_right_maxima(range(1, 6)) == [(i, i) for i in range(1, 6)]


def test_play_positional_examples():
    out = play_positional(EXAMPLE, 3)
    assert (out.hired_position, out.hired_value, out.win) == (6, 9, True)
    out = play_positional(EXAMPLE, 6)
    assert (out.hired_position, out.hired_value, out.win) == (None, None, False)
    out = play_positional(EXAMPLE, 0)
    assert (out.hired_position, out.hired_value, out.win) == (1, 5, False)


@pytest.mark.parametrize("k", [-1, 9])
def test_play_rejects_bad_k(k):
    with pytest.raises(ValueError):
        play_positional(EXAMPLE, k)


def test_is_k_winnable_examples():
    assert [k for k in range(9) if is_k_winnable(EXAMPLE, k)] == [2, 3, 4, 5]
    assert not is_k_winnable(EXAMPLE, 6)
    assert is_k_winnable((5, 1, 2, 3, 4), 0)


def test_winnable_interval_examples():
    assert winnable_interval(EXAMPLE) == (2, 6)
    assert winnable_interval(range(1, 8)) == (6, 7)
    assert winnable_interval(Permutation.parse("41728356")) == (3, 5)


def test_play_matches_interval_exhaustively():
    for p in perms_up_to(8):
        lo, hi = winnable_interval(p)
        wins = [k for k in range(len(p)) if is_k_winnable(p, k)]
        assert wins == list(range(lo, hi))
        assert wins and 0 <= wins[0] and wins[-1] <= len(p) - 1


def test_prefix_signature():
    shown = [str(s) for s in prefix_signature(EXAMPLE)]
    assert shown[:6] == ["1", "12", "231", "3421", "45312", "453126"]
    assert prefix_signature((1,)) == [(1,)]
    assert prefix_signature((2, 1, 3)) == [(1,), (2, 1), (2, 1, 3)]


def test_outcome_invariants():
    for p in perms_up_to(6):
        for k in range(len(p)):
            out = play_positional(p, k)
            assert (out.hired_position is None) == (out.hired_value is None)
            assert out.win == (out.hired_value == len(p))
