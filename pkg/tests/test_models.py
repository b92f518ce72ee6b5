from fractions import Fraction

import pytest

from bestchoice.exact import CatalanCombo, S_combo, win_probability_321
from bestchoice.models import (
    ModelId,
    asymptotic_success,
    dominance_check_321,
    expected_optimal_k_321,
    extend_231,
    limit_of_combo,
    optimal_k_321,
    win_probability_231,
    winnable_count_231,
)
from bestchoice.oracle import enumerate_avoiders
from bestchoice.perms import PatternId, contains_pattern, is_k_winnable


def test_extend_231_examples():
    assert extend_231((3, 1, 2, 4), 2) == (3, 1, 2, 5, 4)
    assert extend_231((2, 1), 2) == (2, 1, 3)
    assert extend_231((1, 2), 0) == (3, 1, 2)
    assert extend_231((), 0) == (1,)


def test_extend_231_results_are_winnable_avoiders():
    for q in [extend_231((3, 1, 2, 4), 2), extend_231((2, 1), 2), extend_231((1, 2), 0)]:
        assert not contains_pattern(q, PatternId.P231)
    assert is_k_winnable((3, 1, 2, 5, 4), 2)
    assert is_k_winnable((2, 1, 3), 2)


def test_extend_231_rejects_bad_input():
    with pytest.raises(ValueError):
        extend_231((2, 3, 1), 1)
    with pytest.raises(ValueError):
        extend_231((1, 2), 3)


def test_extension_is_unique_exhaustively():
    for n in range(2, 9):
        for p in enumerate_avoiders(n - 1, PatternId.P231):
            for k in range(n):
                good = [q for q in (p[:i] + (n,) + p[i:] for i in range(n))
                        if not contains_pattern(q, PatternId.P231) and is_k_winnable(q, k)]
                assert good == [extend_231(p, k)]


def test_winnable_count_231():
    assert winnable_count_231(5, 3) == 14
    assert winnable_count_231(5, 0) == 14
    assert winnable_count_231(2, 1) == 1
    with pytest.raises(ValueError):
        winnable_count_231(5, 5)


def test_win_probability_231():
    assert win_probability_231(5).fraction == Fraction(1, 3)
    assert win_probability_231(2).fraction == Fraction(1, 2)
    assert abs(win_probability_231(3000).float_view - 0.25) < 1e-3


@pytest.mark.parametrize("n, k, prob", [(2, 1, (1, 2)), (5, 3, (23, 42)), (9, 6, (2442, 4862))])
def test_optimal_k_examples(n, k, prob):
    best = optimal_k_321(n)
    assert best.k_star == k
    assert (best.win_prob.numerator, best.win_prob.denominator) == prob
    assert best.k_star in best.ties


def test_optimal_k_piecewise_law_to_200():
    ties = {}
    for n in range(2, 201):
        best = optimal_k_321(n)
        assert best.k_star == expected_optimal_k_321(n)
        assert best.win_prob == win_probability_321(best.k_star, n)
        if len(best.ties) > 1:
            ties[n] = best.ties
    # the only tie: k = 0 and k = 1 both win on one of the two permutations of size 2
    assert ties == {2: (0, 1)}


def test_optimal_record_format():
    rec = optimal_k_321(9).as_record()
    assert rec == {"N": 9, "k_star": 6, "ties": [6], "prob_num": "2442", "prob_den": "4862",
                   "prob_float": 2442 / 4862}


def test_limit_of_combo():
    assert limit_of_combo(S_combo(3)) == Fraction(31, 64)
    assert float(limit_of_combo(S_combo(3))) == 0.484375
    assert limit_of_combo(S_combo(1)) == Fraction(1, 4)
    assert limit_of_combo(CatalanCombo()) == 0


def test_asymptotic_success():
    assert asymptotic_success(ModelId.MODEL_231) == Fraction(1, 4)
    assert asymptotic_success("321") == Fraction(31, 64)
    assert asymptotic_success(ModelId.MODEL_321) == limit_of_combo(S_combo(3))


def test_limits_of_larger_forms_stay_below_three_eighths():
    for i in range(5, 12):
        assert limit_of_combo(S_combo(i)) < Fraction(3, 8)


def test_dominance_row_nine():
    from bestchoice.exact import S_closed

    assert S_closed(6, 9) == 2442
    assert [S_closed(9 - i, 9) for i in range(4, 9)] == [1817, 1064, 490, 168, 36]


def test_dominance_check():
    assert dominance_check_321(12).ok
    report = dominance_check_321(200)
    assert report.ok and report.checked == sum(n - 4 for n in range(9, 201))
    with pytest.raises(ValueError):
        dominance_check_321(8)

