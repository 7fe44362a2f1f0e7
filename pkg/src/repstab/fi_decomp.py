"""FI#-generator dimensions of H_k(F(T°); Q) and the sequences W_i(n).

An FI#-module is a sum of free modules M(W_d), and dim M(W_d)_n equals
dim(W_d) * C(n, d).  The generator dimensions are therefore exactly the
binomial-basis coefficients of the Betti polynomial.  Above degree k = 5
only the support bound (generators vanish above 2k-2) is known, so answers
are three-valued.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .betti_tables import MAX_K, punctured_torus_betti


@dataclass(frozen=True)
class DimAnswer:
    """A dimension that is structurally zero, exactly known, or unknown."""

    kind: Literal["zero", "exact", "unknown"]
    value: int | None = None

    @classmethod
    def zero(cls) -> "DimAnswer":
        return cls("zero", 0)

    @classmethod
    def exact(cls, value: int) -> "DimAnswer":
        if value < 0:
            raise ValueError(f"dimension must be non-negative, got {value}")
        return cls("exact", value)

    @classmethod
    def unknown(cls) -> "DimAnswer":
        return cls("unknown", None)

    @property
    def is_zero(self) -> bool:
        return self.kind == "zero" or (self.kind == "exact" and self.value == 0)

    @property
    def is_known(self) -> bool:
        return self.kind != "unknown"

    def times(self, factor: int) -> "DimAnswer":
        """Scale by a structural integer factor; a zero factor absorbs Unknown."""
        if factor == 0 or self.kind == "zero":
            return DimAnswer.zero()
        if self.kind == "unknown":
            return self
        return DimAnswer.exact(factor * self.value)

    def __str__(self) -> str:
        if self.kind == "zero":
            return "0"
        if self.kind == "unknown":
            return "?"
        return str(self.value)


@dataclass(frozen=True)
class GeneratorTable:
    k: int
    dims: tuple[int, ...]

    @property
    def support_bound(self) -> int:
        return len(self.dims) - 1


def support_bound(k: int) -> int:
    """Largest generator degree d with W_d allowed to be nonzero in H_k."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if k <= 2:
        return (0, 1, 3)[k]
    return 2 * k - 2


def generator_table(k: int) -> GeneratorTable:
    poly = punctured_torus_betti(k)
    table = GeneratorTable(k, poly.coeffs)
    assert table.support_bound == support_bound(k) and table.dims[-1] != 0
    return table


def fi_generator_dim(k: int, m: int) -> DimAnswer:
    """dim H_0^FI(H_k(F(T°)))_m."""
    if m < 0:
        raise ValueError(f"generator degree must be non-negative, got {m}")
    if m > support_bound(k):
        return DimAnswer.zero()
    if k > MAX_K:
        return DimAnswer.unknown()
    return DimAnswer.exact(generator_table(k).dims[m])


def secondary_generators(i: int, n: int) -> DimAnswer:
    """dim W_i(n) = dim H_0^FI(H_{(n+i)/2})_n, zero when n + i is odd."""
    if i < 0 or n < 0:
        raise ValueError(f"i and n must be non-negative, got i={i}, n={n}")
    if (n + i) % 2:
        return DimAnswer.zero()
    return fi_generator_dim((n + i) // 2, n)


def secondary_sequence(i: int, n_max: int) -> list[tuple[int, DimAnswer]]:
    return [(n, secondary_generators(i, n)) for n in range(n_max + 1)]
