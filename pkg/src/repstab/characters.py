"""Character oracle for the signed perfect-matching representation of S_{2n}.

The module M^FIM+(0)_{2n} has one basis vector per perfect matching, with
the blocks ordered and reordering by sigma costing sign(sigma).  A
permutation g contributes to the trace only at matchings it fixes
setwise, with the sign of the induced permutation of blocks.  Decomposing
that character against Murnaghan-Nakayama characters gives D_{2n}
independently of any Young-diagram criterion.
"""
from __future__ import annotations

import math
from collections import Counter
from functools import lru_cache
from typing import Iterator

from .partitions import Partition, enumerate_partitions


def _to_beta(lam: tuple[int, ...], length: int) -> tuple[int, ...]:
    padded = lam + (0,) * (length - len(lam))
    return tuple(p + length - 1 - i for i, p in enumerate(padded))


def _from_beta(beta: list[int]) -> tuple[int, ...]:
    beta = sorted(beta, reverse=True)
    length = len(beta)
    return tuple(p for p in (b - (length - 1 - i) for i, b in enumerate(beta)) if p)


@lru_cache(maxsize=None)
def character(lam: tuple[int, ...], rho: tuple[int, ...]) -> int:
    """chi^lam at cycle type rho, by the Murnaghan-Nakayama rule on beta-numbers."""
    if sum(lam) != sum(rho):
        raise ValueError(f"sizes differ: {lam} vs {rho}")
    if not rho:
        return 1
    r, rest = rho[0], rho[1:]
    beta = _to_beta(lam, len(lam))
    beta_set = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in beta_set:
            continue
        height = sum(1 for c in beta if target < c < b)
        new_beta = [target if c == b else c for c in beta]
        total += (-1) ** height * character(_from_beta(new_beta), rest)
    return total


def class_size(rho: tuple[int, ...]) -> int:
    z = 1
    for part, mult in Counter(rho).items():
        z *= part**mult * math.factorial(mult)
    return math.factorial(sum(rho)) // z


def class_representative(rho: tuple[int, ...]) -> tuple[int, ...]:
    """A permutation (as an image tuple) with cycle type ``rho``."""
    perm = list(range(sum(rho)))
    start = 0
    for part in rho:
        for j in range(part):
            perm[start + j] = start + (j + 1) % part
        start += part
    return tuple(perm)


def perfect_matchings(points: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
    if not points:
        yield ()
        return
    first, rest = points[0], points[1:]
    for idx, partner in enumerate(rest):
        remaining = rest[:idx] + rest[idx + 1 :]
        for tail in perfect_matchings(remaining):
            yield ((first, partner),) + tail


def _perm_sign(perm: list[int]) -> int:
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def signed_matching_trace(g: tuple[int, ...]) -> int:
    total = 0
    for matching in perfect_matchings(tuple(range(len(g)))):
        blocks = [frozenset(b) for b in matching]
        index = {b: i for i, b in enumerate(blocks)}
        images = [frozenset(g[x] for x in b) for b in blocks]
        if all(im in index for im in images):
            total += _perm_sign([index[im] for im in images])
    return total


def signed_matching_decomposition(m: int) -> dict[Partition, int]:
    """Multiplicities of irreducibles in the signed matching module on ``m`` points."""
    if m < 0 or m % 2:
        raise ValueError(f"m must be even and non-negative, got {m}")
    shapes = enumerate_partitions(m)
    classes = [p.parts for p in shapes]
    traces = {rho: signed_matching_trace(class_representative(rho)) for rho in classes}
    out = {}
    for lam in shapes:
        inner = sum(class_size(rho) * character(lam.parts, rho) * traces[rho] for rho in classes)
        mult, rem = divmod(inner, math.factorial(m))
        if rem:
            raise ArithmeticError(f"non-integral multiplicity for {lam}")
        if mult:
            out[lam] = mult
    return out
