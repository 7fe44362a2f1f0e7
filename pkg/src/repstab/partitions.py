"""Partitions, hook lengths, Frobenius coordinates and the family D_{2n}.

D_{2n} indexes the irreducible summands of the signed perfect-matching
module M^FIM+(0)_{2n}.  Membership is tested on Frobenius coordinates:
lambda = (a_1, ..., a_r | b_1, ..., b_r) is in D iff a_i = b_i + 1 for all
i.  Cutting the diagram along the staircase just above the diagonal leaves
the arm part and the leg-plus-diagonal part, and the reflection swaps
them exactly when that equation holds.  :mod:`repstab.characters`
confirms the criterion against an explicit character computation.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Iterator

from . import CapExceeded

DEFAULT_CAP = 30
CAP_ENV = "REPSTAB_CAP"


def partition_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 0:
        raise ValueError(f"{CAP_ENV} must be non-negative, got {cap}")
    return cap


def _check_cap(m: int) -> None:
    cap = partition_cap()
    if m > cap:
        raise CapExceeded(f"partition size {m} exceeds the cap {cap} (set {CAP_ENV} to raise it)")


@dataclass(frozen=True)
class FrobeniusCoords:
    arms: tuple[int, ...]
    legs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.arms) != len(self.legs):
            raise ValueError("arms and legs must have the same length")
        for seq in (self.arms, self.legs):
            if any(x < 0 for x in seq) or any(x <= y for x, y in zip(seq, seq[1:])):
                raise ValueError(f"Frobenius coordinates must be strictly decreasing and >= 0: {seq}")

    @property
    def rank(self) -> int:
        return len(self.arms)

    @property
    def size(self) -> int:
        return sum(a + b + 1 for a, b in zip(self.arms, self.legs))

    def to_partition(self) -> "Partition":
        r = self.rank
        if r == 0:
            return Partition(())
        # rows 1..r come from arms; rows below the Durfee square from legs.
        rows = [a + i + 1 for i, a in enumerate(self.arms)]
        col_lengths = [b + j + 1 for j, b in enumerate(self.legs)]
        below = max(col_lengths) - r
        for extra in range(below):
            row_index = r + extra
            rows.append(sum(1 for c in col_lengths if c > row_index))
        return Partition(tuple(rows))

    def __str__(self) -> str:
        return f"({','.join(map(str, self.arms))} | {','.join(map(str, self.legs))})"


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __init__(self, parts=()) -> None:
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(x < y for x, y in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def hook_lengths(self) -> list[list[int]]:
        conj = self.conjugate().parts
        return [
            [(row - j - 1) + (conj[j] - i - 1) + 1 for j in range(row)]
            for i, row in enumerate(self.parts)
        ]

    def frobenius(self) -> FrobeniusCoords:
        conj = self.conjugate().parts
        r = sum(1 for i, p in enumerate(self.parts) if p > i)
        return FrobeniusCoords(
            tuple(self.parts[i] - i - 1 for i in range(r)),
            tuple(conj[i] - i - 1 for i in range(r)),
        )

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def enumerate_partitions(m: int) -> list[Partition]:
    """All partitions of ``m`` in reverse-lexicographic order."""
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    _check_cap(m)

    def gen(rest: int, largest: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, largest), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return [Partition(p) for p in gen(m, m)]


def irreducible_dim(lam: Partition) -> int:
    """f^lambda = |lambda|! / prod(hooks)."""
    prod = math.prod(h for row in lam.hook_lengths() for h in row)
    return math.factorial(lam.size) // prod


def in_D(lam: Partition) -> bool:
    if lam.size % 2:
        raise ValueError(f"D-membership is only defined for even sizes; {lam} has size {lam.size}")
    fc = lam.frobenius()
    return all(a == b + 1 for a, b in zip(fc.arms, fc.legs))


def d_family(n2: int) -> list[tuple[Partition, int]]:
    if n2 <= 0 or n2 % 2:
        raise ValueError(f"size must be a positive even integer, got {n2}")
    return [(lam, irreducible_dim(lam)) for lam in enumerate_partitions(n2) if in_D(lam)]
