"""Betti polynomials of ordered configuration spaces of T and T°, k <= 5.

Torus rows are transcribed constants (Pagaria's closed forms).  The
punctured-torus rows are derived from them through the splitting
``F_n(T) ~ T x F_{n-1}(T°)``: shift the torus table to ``n + 1`` and
divide by ``P(T) = (1+t)^2``.  The published punctured-torus formulas are
kept only as a checksum for that derivation.
"""
from __future__ import annotations

import enum
from functools import lru_cache

from . import InternalMismatch, UnsupportedDegree
from .binom_poly import (
    BinomialPolynomial,
    PoincareTable,
    divide_by_one_plus_t_squared,
    evaluate,
)
from .combinatorics import binomial

MAX_K = 5

# Coefficients of C(n,0), C(n,1), ... ; one row per homological degree.
TORUS_COEFFS: tuple[tuple[int, ...], ...] = (
    (1,),                              # b_0 = 1
    (0, 2),                            # b_1 = 2n
    (0, 1, 3, 2),                      # b_2 = 2C(n,3) + 3C(n,2) + n
    (0, 0, 2, 8, 14),                  # b_3 = 14C(n,4) + 8C(n,3) + 2C(n,2)
    (0, 0, 0, 5, 33, 74, 32),          # b_4 = 32C(n,6) + 74C(n,5) + 33C(n,4) + 5C(n,3)
    (0, 0, 0, 0, 18, 154, 490, 427, 63),  # b_5 = 63C(n,8) + 427C(n,7) + 490C(n,6) + 154C(n,5) + 18C(n,4)
)

# Published closed forms for T°; compared against the derivation, never returned directly.
PUNCTURED_CHECKSUM: tuple[tuple[int, ...], ...] = (
    (1,),                              # 1
    (0, 2),                            # 2n
    (0, 0, 5, 2),                      # 2C(n,3) + 5C(n,2)
    (0, 0, 0, 18, 14),                 # 14C(n,4) + 18C(n,3)
    (0, 0, 0, 0, 79, 106, 32),         # 32C(n,6) + 106C(n,5) + 79C(n,4)
    (0, 0, 0, 0, 0, 432, 853, 490, 63),  # 63C(n,8) + 490C(n,7) + 853C(n,6) + 432C(n,5)
)

# deg b_k for k = 0..5, identical for both surfaces.
EXPECTED_DEGREES = (0, 1, 3, 4, 6, 8)


class Surface(enum.Enum):
    TORUS = "torus"
    PUNCTURED_TORUS = "punctured"


def _check_k(k: int) -> None:
    if k < 0:
        raise ValueError(f"homological degree must be non-negative, got {k}")
    if k > MAX_K:
        raise UnsupportedDegree(
            f"Betti coefficients are only tabulated for k <= {MAX_K}; got k={k}"
        )


def torus_table() -> PoincareTable:
    return PoincareTable(TORUS_COEFFS)


def torus_betti(k: int) -> BinomialPolynomial:
    _check_k(k)
    return BinomialPolynomial(TORUS_COEFFS[k])


def derive_punctured_table(torus: PoincareTable | None = None) -> PoincareTable:
    """b_k(F_n(T°)) = sum_m (-1)^(k-m) (k+1-m) b_m(F_{n+1}(T))."""
    torus = torus_table() if torus is None else torus
    return divide_by_one_plus_t_squared(torus.shifted())


@lru_cache(maxsize=None)
def punctured_table() -> PoincareTable:
    table = derive_punctured_table()
    for k, expected in enumerate(PUNCTURED_CHECKSUM):
        if table[k] != BinomialPolynomial(expected):
            raise InternalMismatch(
                f"derived b_{k}(F_n(T°)) = {table[k]} disagrees with the published {BinomialPolynomial(expected)}"
            )
    return table


def punctured_torus_betti(k: int) -> BinomialPolynomial:
    _check_k(k)
    return punctured_table()[k]


def betti(surface: Surface, k: int) -> BinomialPolynomial:
    if surface is Surface.TORUS:
        return torus_betti(k)
    return punctured_torus_betti(k)


def betti_number(surface: Surface, k: int, n: int) -> int:
    return evaluate(betti(surface, k), n)


def degree_report(surface: Surface) -> list[tuple[int, int]]:
    report = [(k, betti(surface, k).degree()) for k in range(MAX_K + 1)]
    degrees = tuple(d for _, d in report)
    if degrees != EXPECTED_DEGREES:
        raise InternalMismatch(f"{surface.value} degree profile {degrees} != {EXPECTED_DEGREES}")
    return report


def leading_coefficient_bound_check() -> list[tuple[int, int, int, bool]]:
    """Compare the top coefficient c_k of b_k(F_n(T)) with C(2k-3, k-3), k = 3, 4, 5."""
    rows = []
    for k in (3, 4, 5):
        c_k = torus_betti(k).leading_coefficient()
        bound = binomial(2 * k - 3, k - 3)
        rows.append((k, c_k, bound, c_k >= bound))
    return rows
