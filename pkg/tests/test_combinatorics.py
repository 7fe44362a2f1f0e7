import pytest
from hypothesis import given, strategies as st

from oracles import count_derangements, count_matchings, pascal
from repstab.combinatorics import binomial, matchings_count, t_rank


def test_binomial_examples():
    assert binomial(4, 2) == 6
    assert binomial(3, 5) == 0
    assert pascal(20, 10) == 184756
    assert binomial(20, 10) == pascal(20, 10)


def test_binomial_rejects_negative_n():
    with pytest.raises(ValueError):
        binomial(-1, 2)


@pytest.mark.parametrize("n", range(1, 65))
def test_pascal_recurrence(n):
    for d in range(1, n + 1):
        assert binomial(n, d) == binomial(n - 1, d) + binomial(n - 1, d - 1)


def test_binomial_matches_pascal_oracle():
    for n in range(30):
        for d in range(n + 3):
            assert binomial(n, d) == pascal(n, d)


@pytest.mark.parametrize("m, expected", [(0, 1), (2, 1), (4, 3), (6, 15), (8, 105)])
def test_matchings_against_enumeration(m, expected):
    assert count_matchings(m) == expected
    assert matchings_count(m) == expected


def test_matchings_rejects_odd():
    with pytest.raises(ValueError):
        matchings_count(5)


def test_matchings_recurrence():
    for m in range(2, 61, 2):
        assert matchings_count(m) == (m - 1) * matchings_count(m - 2)


def test_matchings_big_values_are_exact():
    # (2n)!/(n! 2^n) at 2n = 60 is far beyond 64 bits
    assert matchings_count(60) > 2**64
    assert matchings_count(60) == 59 * matchings_count(58)


@pytest.mark.parametrize("p, expected", [(0, 1), (1, 0), (2, 1), (3, 2), (4, 9), (5, 44)])
def test_t_rank_values(p, expected):
    assert count_derangements(p) == expected
    assert t_rank(p) == expected


def test_t_rank_recurrence():
    for p in range(1, 21):
        assert t_rank(p) == p * t_rank(p - 1) + (-1) ** p


@given(st.integers(0, 200), st.integers(0, 200))
def test_binomial_symmetry(n, d):
    if d <= n:
        assert binomial(n, d) == binomial(n, n - d)
    else:
        assert binomial(n, d) == 0
