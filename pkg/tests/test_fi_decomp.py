import pytest

from repstab import UnsupportedDegree
from repstab.betti_tables import punctured_torus_betti
from repstab.binom_poly import evaluate
from repstab.combinatorics import binomial
from repstab.fi_decomp import (
    DimAnswer,
    fi_generator_dim,
    generator_table,
    secondary_generators,
    secondary_sequence,
    support_bound,
)


@pytest.mark.parametrize(
    "k, dims",
    [(0, (1,)), (1, (0, 2)), (2, (0, 0, 5, 2)), (3, (0, 0, 0, 18, 14)),
     (4, (0, 0, 0, 0, 79, 106, 32)), (5, (0, 0, 0, 0, 0, 432, 853, 490, 63))],
)
def test_generator_tables(k, dims):
    table = generator_table(k)
    assert table.dims == dims
    assert table.support_bound == support_bound(k) == len(dims) - 1
    assert table.dims[-1] != 0


def test_generator_table_unsupported():
    with pytest.raises(UnsupportedDegree):
        generator_table(6)


def test_reconstruction():
    for k in range(6):
        dims = generator_table(k).dims
        for n in range(51):
            assert sum(w * binomial(n, d) for d, w in enumerate(dims)) == evaluate(punctured_torus_betti(k), n)


def test_fi_generator_dim_examples():
    assert fi_generator_dim(4, 6) == DimAnswer.exact(32)
    assert fi_generator_dim(7, 13) == DimAnswer.zero()
    assert fi_generator_dim(6, 10) == DimAnswer.unknown()
    assert fi_generator_dim(6, 11).kind == "zero"


def test_support_bound_values():
    assert [support_bound(k) for k in range(8)] == [0, 1, 3, 4, 6, 8, 10, 12]


def test_secondary_examples():
    assert secondary_generators(2, 4) == DimAnswer.exact(14)
    assert secondary_generators(2, 3) == DimAnswer.zero()
    assert secondary_generators(0, 4).is_zero


def test_w0_support():
    assert secondary_generators(0, 0) == DimAnswer.exact(1)
    for n in range(1, 6):
        assert secondary_generators(0, 2 * n).is_zero


def test_w1_support():
    assert secondary_generators(1, 1).value == 2
    assert secondary_generators(1, 3).value == 2
    for n in range(5, 41, 2):
        assert secondary_generators(1, n).is_zero


def test_w2_values():
    assert [secondary_generators(2, n).value for n in (2, 4, 6, 8)] == [5, 14, 32, 63]
    assert all(secondary_generators(2, n).is_zero for n in range(1, 30, 2))
    assert secondary_generators(2, 10).kind == "unknown"


def test_secondary_sequence_shape():
    seq = secondary_sequence(2, 5)
    assert [n for n, _ in seq] == list(range(6))


def test_dim_answer_scaling():
    assert DimAnswer.unknown().times(0) == DimAnswer.zero()
    assert DimAnswer.unknown().times(3).kind == "unknown"
    assert DimAnswer.exact(4).times(3) == DimAnswer.exact(12)
    assert DimAnswer.zero().times(7) == DimAnswer.zero()
    with pytest.raises(ValueError):
        DimAnswer.exact(-1)
