"""Acceptance identities, runnable without pytest (``repstab selfcheck``)."""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Callable

from .arc_ss import diagonal_vanishing_report, e2_entry_dim
from .betti_tables import (
    EXPECTED_DEGREES,
    MAX_K,
    PUNCTURED_CHECKSUM,
    Surface,
    degree_report,
    derive_punctured_table,
    leading_coefficient_bound_check,
    punctured_table,
    torus_table,
)
from .binom_poly import (
    BinomialPolynomial,
    PoincareTable,
    divide_by_one_plus_t_squared,
    evaluate,
    multiply_by_one_plus_t_squared,
    shift,
)
from .characters import signed_matching_decomposition
from .combinatorics import binomial, matchings_count, t_rank
from .fi_decomp import secondary_generators
from .fim_plus import certify_not_free, free_fim_dim
from .partitions import FrobeniusCoords, enumerate_partitions, in_D, irreducible_dim


@dataclass(frozen=True)
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str


class CheckFailed(AssertionError):
    pass


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise CheckFailed(message)


def check_derivation() -> str:
    derived = derive_punctured_table()
    for k, expected in enumerate(PUNCTURED_CHECKSUM):
        _require(derived[k].coeffs == expected, f"k={k}: {derived[k].coeffs} != {expected}")
    return "shift-then-divide reproduces all six punctured-torus rows"


def check_round_trip() -> str:
    product = multiply_by_one_plus_t_squared(punctured_table())
    torus = torus_table()
    # (1+t)^2 P(F_n(T°)) = P(F_{n+1}(T)), i.e. the torus table shifted once.
    for k in range(4):
        _require(product[k] == shift(torus[k]), f"row {k}: {product[k]} != shift({torus[k]})")
        for n in range(1, 30):
            _require(evaluate(product[k], n - 1) == evaluate(torus[k], n), f"row {k} at n={n}")
    return "(1+t)^2 * P(F_n(T°)) equals P(F_(n+1)(T)) on rows 0..3"


def check_degrees() -> str:
    for surface in Surface:
        degrees = tuple(d for _, d in degree_report(surface))
        _require(degrees == EXPECTED_DEGREES, f"{surface.value}: {degrees}")
    leads = tuple(punctured_table()[k].leading_coefficient() for k in range(MAX_K + 1))
    _require(leads == (1, 2, 2, 14, 32, 63), f"leading coefficients {leads}")
    bounds = leading_coefficient_bound_check()
    _require([(k, c, b) for k, c, b, _ in bounds] == [(3, 14, 1), (4, 32, 5), (5, 63, 21)], str(bounds))
    _require(all(ok for *_, ok in bounds), str(bounds))
    return "degrees 0,1,3,4,6,8; c_k >= C(2k-3,k-3): 14>=1, 32>=5, 63>=21"


def check_nonfree() -> str:
    verdict = certify_not_free({0: 0, 2: 5, 4: 14}, 4)
    _require(verdict.verdict == "NotFree", verdict.verdict)
    w = verdict.witness
    _require((w.degree, w.required_dim, w.actual_dim) == (4, 30, 14), str(w))
    return "NotFree, witness degree 4: free dimension 30 > actual 14"


DOUBLE_FACTORIALS = {2: 1, 4: 3, 6: 15, 8: 105, 10: 945, 12: 10395, 14: 135135, 16: 2027025}


def check_d_family() -> str:
    for m in range(13):
        total = sum(irreducible_dim(lam) ** 2 for lam in enumerate_partitions(m))
        _require(total == math.factorial(m), f"sum (f^lam)^2 != {m}! at m={m}")
    for size, expected in DOUBLE_FACTORIALS.items():
        total = sum(irreducible_dim(lam) for lam in enumerate_partitions(size) if in_D(lam))
        _require(total == expected == matchings_count(size), f"D_{size}: {total} != {expected}")
    for size in (2, 4, 6, 8):
        oracle = signed_matching_decomposition(size)
        _require(all(mult == 1 for mult in oracle.values()), f"multiplicity > 1 at {size}")
        members = {lam for lam in enumerate_partitions(size) if in_D(lam)}
        _require(set(oracle) == members, f"D_{size} disagrees with the character oracle")
    return "sum_D f^lam = (2n-1)!! for 2n <= 16; RSK for m <= 12; oracle agrees for 2n <= 8"


def check_spectral() -> str:
    for n in range(1, 31):
        for q in range(9):
            _require(e2_entry_dim(0, q, n).is_zero, f"E2_(0,{q})({n}) nonzero")
    for n in range(8, 41, 2):
        report = diagonal_vanishing_report(n)
        _require(len(report) == (n - 2) // 2 + 1, f"diagonal length at n={n}")
        _require(all(d.is_known and d.is_zero for _, d in report), f"diagonal at n={n}")
    _require(e2_entry_dim(3, 1, 6).is_zero and e2_entry_dim(4, 0, 6).is_zero, "n=6 case")
    return "column p=0 zero; diagonals zero for even 8..40; E2_(3,1)(6) = E2_(4,0)(6) = 0"


def check_w_sequences() -> str:
    _require(secondary_generators(0, 0).value == 1, "W_0(0)")
    _require(all(secondary_generators(0, 2 * n).is_zero for n in range(1, 30)), "W_0 even")
    w1 = {n: secondary_generators(1, n) for n in range(1, 40, 2)}
    _require(w1[1].value == 2 and w1[3].value == 2, "W_1(1), W_1(3)")
    _require(all(w1[n].is_zero for n in w1 if n >= 5), "W_1 at odd n >= 5")
    w2 = [secondary_generators(2, n).value for n in (2, 4, 6, 8)]
    _require(w2 == [5, 14, 32, 63], f"W_2 = {w2}")
    _require(all(secondary_generators(2, n).is_zero for n in range(1, 40, 2)), "W_2 at odd n")
    return "W_0 = 1,0,0,...; W_1 = 2,2 at n=1,3 then 0; W_2 = 5,14,32,63"


def _random_table(rng: random.Random, max_k: int) -> PoincareTable:
    return PoincareTable(
        [[rng.randint(-20, 20) for _ in range(rng.randint(0, 6))] for _ in range(max_k + 1)]
    )


def check_properties() -> str:
    for n in range(1, 65):
        for d in range(1, n + 1):
            _require(binomial(n, d) == binomial(n - 1, d) + binomial(n - 1, d - 1), f"Pascal {n},{d}")
    for p in range(1, 21):
        _require(t_rank(p) == p * t_rank(p - 1) + (-1) ** p, f"derangement {p}")
    for m in range(2, 41, 2):
        _require(matchings_count(m) == (m - 1) * matchings_count(m - 2), f"matchings {m}")

    tables = [torus_table(), punctured_table()]
    for table in tables:
        for row in table.rows:
            for n in range(41):
                _require(evaluate(shift(row), n) == evaluate(row, n + 1), f"shift {row} at {n}")
    rng = random.Random(20201)
    for _ in range(200):
        t = _random_table(rng, rng.randint(0, 8))
        _require(divide_by_one_plus_t_squared(multiply_by_one_plus_t_squared(t)) == t, "divide∘multiply")
        _require(multiply_by_one_plus_t_squared(divide_by_one_plus_t_squared(t)) == t, "multiply∘divide")

    specs: list[dict[int, int]] = [{}]
    for d, dim in itertools.product(range(7), range(1, 10)):
        specs.append({d: dim})
    for (d1, d2), (g1, g2) in itertools.product(itertools.combinations(range(7), 2), itertools.product(range(1, 10), repeat=2)):
        specs.append({d1: g1, d2: g2})
    for spec in specs:
        profile = {N: free_fim_dim(spec, N) for N in range(11)}
        verdict = certify_not_free(profile, 10)
        _require(verdict.is_free_compatible and dict(verdict.generators) == spec, f"round trip {spec}")

    for m in range(21):
        for lam in enumerate_partitions(m):
            fc = lam.frobenius()
            _require(fc.to_partition() == lam, f"Frobenius {lam}")
            _require(FrobeniusCoords(fc.arms, fc.legs).to_partition().frobenius() == fc, f"Frobenius {fc}")
    return f"recurrences, shift identity, 200 random round trips, {len(specs)} free profiles, Frobenius |lam|<=20"


CRITERIA: list[tuple[int, str, Callable[[], str]]] = [
    (1, "derivation identity", check_derivation),
    (2, "(1+t)^2 round trip", check_round_trip),
    (3, "degree profile and leading coefficients", check_degrees),
    (4, "non-freeness certificate", check_nonfree),
    (5, "D-family identity", check_d_family),
    (6, "spectral reports", check_spectral),
    (7, "W-sequences", check_w_sequences),
    (8, "property suites", check_properties),
]


def run_checks() -> list[CheckResult]:
    results = []
    for number, name, fn in CRITERIA:
        try:
            detail = fn()
            results.append(CheckResult(number, name, True, detail))
        except Exception as exc:  # a crash is a failed criterion, not a crashed run
            results.append(CheckResult(number, name, False, f"{type(exc).__name__}: {exc}"))
    return results
