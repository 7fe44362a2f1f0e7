import math

import pytest

from repstab.characters import (
    character,
    class_representative,
    class_size,
    perfect_matchings,
    signed_matching_decomposition,
    signed_matching_trace,
)
from repstab.partitions import enumerate_partitions, in_D, irreducible_dim


def test_character_at_identity_is_hook_dimension():
    for m in range(1, 9):
        for lam in enumerate_partitions(m):
            assert character(lam.parts, (1,) * m) == irreducible_dim(lam)


@pytest.mark.parametrize("m", range(1, 8))
def test_column_orthogonality(m):
    shapes = [p.parts for p in enumerate_partitions(m)]
    for rho in shapes:
        assert sum(character(lam, rho) ** 2 for lam in shapes) * class_size(rho) == math.factorial(m)


def test_s4_character_table_row():
    # chi^(3,1) on classes 1^4, 2 1^2, 2^2, 3 1, 4
    assert [character((3, 1), rho) for rho in [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]] == [3, 1, -1, 0, -1]


def test_class_sizes_sum_to_factorial():
    for m in range(1, 9):
        assert sum(class_size(p.parts) for p in enumerate_partitions(m)) == math.factorial(m)


def test_class_representative_cycle_type():
    g = class_representative((3, 2, 1))
    assert sorted(g) == list(range(6))
    assert g[:3] == (1, 2, 0) and g[3:5] == (4, 3) and g[5] == 5


def test_perfect_matching_counts():
    assert [len(list(perfect_matchings(tuple(range(m))))) for m in (0, 2, 4, 6)] == [1, 1, 3, 15]


def test_signed_trace_s4():
    # Hand count on S_4: identity, (12), (12)(34), (123), (1234)
    reps = [(0, 1, 2, 3), (1, 0, 2, 3), (1, 0, 3, 2), (1, 2, 0, 3), (1, 2, 3, 0)]
    assert [signed_matching_trace(g) for g in reps] == [3, 1, -1, 0, -1]


@pytest.mark.parametrize("m", [2, 4, 6, 8])
def test_oracle_matches_frobenius_criterion(m):
    oracle = signed_matching_decomposition(m)
    assert set(oracle.values()) == {1}
    assert set(oracle) == {lam for lam in enumerate_partitions(m) if in_D(lam)}
