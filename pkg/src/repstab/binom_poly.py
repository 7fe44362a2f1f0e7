"""Integer polynomials in the binomial basis and Poincare tables built from them.

A :class:`BinomialPolynomial` with coefficients ``(c_0, ..., c_D)`` is the
function ``n -> sum_d c_d * C(n, d)``.  A :class:`PoincareTable` stacks one
such polynomial per homological degree, so row ``k`` is the Betti number
``b_k`` as a function of the particle count.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .combinatorics import binomial


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = [int(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class BinomialPolynomial:
    coeffs: tuple[int, ...] = ()

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def zero(cls) -> "BinomialPolynomial":
        return cls(())

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Top binomial index with a nonzero coefficient; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def __call__(self, n: int) -> int:
        return evaluate(self, n)

    def __add__(self, other: "BinomialPolynomial") -> "BinomialPolynomial":
        size = max(len(self.coeffs), len(other.coeffs))
        return BinomialPolynomial(self.coefficient(d) + other.coefficient(d) for d in range(size))

    def __neg__(self) -> "BinomialPolynomial":
        return BinomialPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "BinomialPolynomial") -> "BinomialPolynomial":
        return self + (-other)

    def scale(self, factor: int) -> "BinomialPolynomial":
        return BinomialPolynomial(factor * c for c in self.coeffs)

    def __rmul__(self, factor: int) -> "BinomialPolynomial":
        return self.scale(factor)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = [f"{c}*C(n,{d})" for d, c in reversed(list(enumerate(self.coeffs))) if c]
        return " + ".join(terms).replace("+ -", "- ")


def evaluate(p: BinomialPolynomial, n: int) -> int:
    """Exact value ``sum_d c_d * C(n, d)``."""
    if n < 0:
        raise ValueError(f"evaluate: n must be non-negative, got {n}")
    return sum(c * binomial(n, d) for d, c in enumerate(p.coeffs))


def shift(p: BinomialPolynomial) -> BinomialPolynomial:
    """Return ``q`` with ``q(n) == p(n + 1)``.

    Uses C(n+1, d) = C(n, d) + C(n, d-1), so the new coefficient at ``d``
    is ``c_d + c_{d+1}``.
    """
    c = p.coeffs
    return BinomialPolynomial(c[d] + (c[d + 1] if d + 1 < len(c) else 0) for d in range(len(c)))


@dataclass(frozen=True)
class PoincareTable:
    """Rows ``0..max_k`` of a Poincare series with polynomial coefficients."""

    rows: tuple[BinomialPolynomial, ...]

    def __init__(self, rows: Sequence[BinomialPolynomial | Iterable[int]]) -> None:
        if not rows:
            raise ValueError("PoincareTable needs at least one row")
        object.__setattr__(
            self,
            "rows",
            tuple(r if isinstance(r, BinomialPolynomial) else BinomialPolynomial(r) for r in rows),
        )

    @property
    def max_k(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, k: int) -> BinomialPolynomial:
        return self.rows[k]

    def row(self, k: int) -> BinomialPolynomial:
        """Row ``k``, or zero for ``k < 0``."""
        return self.rows[k] if k >= 0 else BinomialPolynomial.zero()

    def shifted(self) -> "PoincareTable":
        return PoincareTable([shift(r) for r in self.rows])

    def evaluate(self, n: int) -> list[int]:
        return [evaluate(r, n) for r in self.rows]

    def __add__(self, other: "PoincareTable") -> "PoincareTable":
        if self.max_k != other.max_k:
            raise ValueError("tables must have the same max_k")
        return PoincareTable([a + b for a, b in zip(self.rows, other.rows)])

    def scale(self, factor: int) -> "PoincareTable":
        return PoincareTable([r.scale(factor) for r in self.rows])


def divide_by_one_plus_t_squared(table: PoincareTable) -> PoincareTable:
    """Multiply by the series ``1/(1+t)^2 = sum_i (-1)^i (i+1) t^i``.

    Row ``k`` of the result is ``sum_{m<=k} (-1)^(k-m) (k+1-m) row_m``,
    exact through ``table.max_k``.
    """
    out = []
    for k in range(table.max_k + 1):
        acc = BinomialPolynomial.zero()
        for m in range(k + 1):
            acc = acc + table[m].scale((-1) ** (k - m) * (k + 1 - m))
        out.append(acc)
    return PoincareTable(out)


def multiply_by_one_plus_t_squared(table: PoincareTable) -> PoincareTable:
    """Multiply by ``(1+t)^2``; row ``k`` becomes ``row_k + 2 row_{k-1} + row_{k-2}``.

    The product only reads rows at or below ``k``, so every output row
    through ``table.max_k`` is exact.
    """
    return PoincareTable(
        [table.row(k) + table.row(k - 1).scale(2) + table.row(k - 2) for k in range(table.max_k + 1)]
    )
