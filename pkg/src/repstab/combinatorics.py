"""Exact integer primitives: binomials, perfect matchings, derangements."""
from __future__ import annotations

import math


def binomial(n: int, d: int) -> int:
    """C(n, d) for n, d >= 0; zero when d > n."""
    if n < 0:
        raise ValueError(f"binomial: n must be non-negative, got {n}")
    if d < 0:
        raise ValueError(f"binomial: d must be non-negative, got {d}")
    return math.comb(n, d)


def matchings_count(m: int) -> int:
    """Number of perfect matchings on ``m`` points, i.e. (m-1)!!.

    Odd ``m`` has no perfect matching and is rejected rather than mapped
    to zero; callers decide how parity should be handled.
    """
    if m < 0 or m % 2:
        raise ValueError(f"matchings_count: m must be even and non-negative, got {m}")
    half = m // 2
    return math.factorial(m) // (math.factorial(half) * 2**half)


def t_rank(p: int) -> int:
    """Derangement number: sum_{i=0}^{p} (-1)^i p!/i!."""
    if p < 0:
        raise ValueError(f"t_rank: p must be non-negative, got {p}")
    fp = math.factorial(p)
    return sum((-1) ** i * (fp // math.factorial(i)) for i in range(p + 1))
