"""Dimensions of free FIM+-modules and a dimension-level non-freeness test."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Mapping

from . import MissingData
from .combinatorics import binomial, matchings_count

FREE_COMPATIBLE = "FreeCompatible"
NOT_FREE = "NotFree"


@dataclass(frozen=True)
class Witness:
    degree: int
    required_dim: int
    actual_dim: int


@dataclass(frozen=True)
class FreenessVerdict:
    """Outcome of :func:`certify_not_free`.

    ``NotFree`` is conclusive.  ``FreeCompatible`` only means no dimension
    obstruction was found in the examined degrees.
    """

    verdict: Literal["FreeCompatible", "NotFree"]
    witness: Witness | None = None
    generators: tuple[tuple[int, int], ...] = ()

    @property
    def is_free_compatible(self) -> bool:
        return self.verdict == FREE_COMPATIBLE


def _validate_spec(gen_dims: Mapping[int, int]) -> None:
    for d, dim in gen_dims.items():
        if d < 0 or dim < 0:
            raise ValueError(f"generator degrees and dimensions must be non-negative, got {d}:{dim}")


def free_fim_dim(gen_dims: Mapping[int, int], N: int) -> int:
    """dim M^FIM+(W)_N = sum_d C(N, d) dim(W_d) (N-d-1)!!, skipping odd or negative N-d."""
    if N < 0:
        raise ValueError(f"N must be non-negative, got {N}")
    _validate_spec(gen_dims)
    total = 0
    for d, dim in gen_dims.items():
        rest = N - d
        if rest < 0 or rest % 2 or dim == 0:
            continue
        total += binomial(N, d) * dim * matchings_count(rest)
    return total


def _examined_degrees(actual: Mapping[int, int], cap: int) -> list[int]:
    degrees = []
    for parity in sorted({d % 2 for d in actual}):
        d = parity
        while d in actual:
            degrees.append(d)
            d += 2
        if d <= cap:
            raise MissingData(f"dimension at degree {d} is required (cap {cap}) but absent")
    return sorted(degrees)


def certify_not_free(actual: Mapping[int, int], gen_degree_cap: int) -> FreenessVerdict:
    """Look for a degree where no free FIM+-module can match ``actual``.

    Generators are forced degree by degree: ``g_d = actual[d] - free_fim_dim(g_<d, d)``.
    A negative ``g_d`` means the module generated by the lower degrees is
    already larger than ``actual[d]``, which a free module cannot allow.

    Every degree up to ``gen_degree_cap`` (in each parity class present in
    ``actual``) must be supplied.  Degrees above the cap are examined while
    they stay contiguous.
    """
    if not actual:
        raise MissingData("empty dimension profile")
    _validate_spec(actual)
    gens: dict[int, int] = {}
    for d in _examined_degrees(actual, gen_degree_cap):
        required = free_fim_dim(gens, d)
        g = actual[d] - required
        if g < 0:
            return FreenessVerdict(NOT_FREE, Witness(d, required, actual[d]), tuple(sorted(gens.items())))
        if g:
            gens[d] = g
    return FreenessVerdict(FREE_COMPATIBLE, None, tuple(sorted(gens.items())))
