"""E^2-page dimensions of the arc resolution spectral sequence for T°.

E^2_{p,q}(n) is induced from S_{p+1} x S_{n-p-1} to S_n of
T_{p+1} (x) H_0^FI(H_q)_{n-p-1}, so its dimension is
C(n, p+1) * D(p+1) * dim H_0^FI(H_q)_{n-p-1} with D the derangement count.
Differentials are not modelled; only the dimension and vanishing facts
used in the generation arguments are exposed.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import InternalMismatch, UnknownDimension
from .combinatorics import binomial, t_rank
from .fi_decomp import DimAnswer, fi_generator_dim

DEFAULT_Q_MAX = 5


def e2_entry_dim(p: int, q: int, n: int) -> DimAnswer:
    if p < -1:
        raise ValueError(f"p must be >= -1, got {p}")
    if q < 0:
        raise ValueError(f"q must be non-negative, got {q}")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    m = n - p - 1
    if m < 0:
        return DimAnswer.zero()
    factor = binomial(n, p + 1) * t_rank(p + 1)
    return fi_generator_dim(q, m).times(factor)


def converges_to_zero(p: int, q: int, n: int) -> bool:
    """E^infinity_{p,q}(n) = 0 whenever p + q + 2 <= n."""
    return p + q + 2 <= n


@dataclass(frozen=True)
class E2Page:
    n: int
    q_max: int
    entries: dict[tuple[int, int], DimAnswer] = field(repr=False)
    vanish_flags: frozenset[tuple[int, int]] = field(repr=False)

    @property
    def columns(self) -> range:
        return range(-1, self.n)

    def __getitem__(self, pq: tuple[int, int]) -> DimAnswer:
        return self.entries[pq]


def e2_page(n: int, q_max: int = DEFAULT_Q_MAX) -> E2Page:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if q_max < 0:
        raise ValueError(f"q_max must be non-negative, got {q_max}")
    entries = {(p, q): e2_entry_dim(p, q, n) for p in range(-1, n) for q in range(q_max + 1)}
    flags = frozenset(pq for pq in entries if converges_to_zero(*pq, n))
    return E2Page(n, q_max, entries, flags)


def vanishing_line_report(n: int, q_max: int = DEFAULT_Q_MAX) -> list[tuple[int, int]]:
    """Positions -1 <= p <= n-1, 0 <= q <= q_max that must vanish at E^infinity."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return [(p, q) for p in range(-1, n) for q in range(q_max + 1) if converges_to_zero(p, q, n)]


def diagonal_position(n: int, q: int) -> tuple[int, int]:
    """(p, generator degree) of the diagonal entry in row q, where p + q = (n+2)/2."""
    p = (n + 2) // 2 - q
    return p, n - p - 1


def diagonal_vanishing_report(n: int) -> list[tuple[int, DimAnswer]]:
    """Dimensions along p + q = (n+2)/2, 0 <= q <= (n-2)/2; all must be zero.

    These are the only positions from which a higher differential could
    reach E_{-1,(n+2)/2}(n).  Vanishing follows from the generator-degree
    bound, so an Unknown answer here is an error rather than a pass.
    """
    if n % 2 or n < 8:
        raise ValueError(f"n must be even and >= 8, got {n}")
    out = []
    for q in range((n - 2) // 2 + 1):
        p, _ = diagonal_position(n, q)
        dim = e2_entry_dim(p, q, n)
        if not dim.is_known:
            raise UnknownDimension(f"E2_{{{p},{q}}}({n}) is unknown; vanishing cannot be certified")
        if not dim.is_zero:
            raise InternalMismatch(f"E2_{{{p},{q}}}({n}) = {dim} on a diagonal expected to vanish")
        out.append((q, dim))
    return out


W1_ASSUMPTION = (
    "d3: E3_{2,0}(3) -> E3_{-1,2}(3) is zero because the bullseye class is a boundary "
    "in F_3(T°); geometric input, assumed here, not computed"
)


@dataclass(frozen=True)
class W1Report:
    n: int
    entries: dict[tuple[int, int], DimAnswer]
    vanishing: tuple[tuple[int, int], ...]
    assumptions: tuple[str, ...]

    @property
    def d2_target_dim(self) -> int:
        return self.entries[(-1, 2)].value

    @property
    def d2_source_dim(self) -> int:
        return self.entries[(1, 1)].value


def w1_generation_report() -> W1Report:
    """The n = 3 page behind generation of W_1 in degree 1.

    E_{-1,2}(3) = W_1(3) must die; the only possible sources are d2 from
    E_{1,1}(3) and d3 from E_{2,0}(3).  Given the assumed vanishing of d3,
    d2 must be onto, so W_1(3) is reached from W_1(1).
    """
    n = 3
    positions = [(p, q) for p in range(-1, n) for q in range(4)]
    entries = {pq: e2_entry_dim(*pq, n) for pq in positions}
    for pq in ((-1, 2), (1, 1), (2, 0)):
        if entries[pq].kind != "exact" or entries[pq].is_zero:
            raise InternalMismatch(f"E2_{pq}(3) should be a nonzero exact dimension, got {entries[pq]}")
    vanishing = tuple(vanishing_line_report(n, 3))
    if (-1, 2) not in vanishing:
        raise InternalMismatch("E_{-1,2}(3) is expected below the vanishing line")
    return W1Report(n, entries, vanishing, (W1_ASSUMPTION,))
