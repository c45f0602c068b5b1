"""Finite enumeration of totally positive integers by trace.

The set of totally positive integers of bounded trace is finite, and so is
the set of ways to split one of them into two totally positive summands.
Both are enumerated straight from the positivity inequalities.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .field import AlgInt, QuadField


@dataclass(frozen=True)
class TraceWindow:
    field: QuadField
    max_trace: int

    def __post_init__(self):
        if self.max_trace < 1:
            raise ValueError("max_trace must be >= 1")


def _strict_bound(t: int, d: int) -> int:
    """Largest v >= 0 with d*v^2 < t^2 (t > 0)."""
    v = isqrt((t * t - 1) // d)
    while d * v * v >= t * t:
        v -= 1
    return v


def totally_positive_of_trace(field: QuadField, t: int) -> list[AlgInt]:
    """All totally positive elements with trace exactly ``t``, sorted by (x, y)."""
    if t < 1:
        return []
    if field.is_rational:
        return [AlgInt(field, t, 0)]
    d = field.d
    if field.omega_kind == "sqrt":
        if t % 2:
            return []
        x = t // 2
        v = _strict_bound(x, d)
        return [AlgInt(field, x, y) for y in range(-v, v + 1)]
    # x + y w with w = (1+sqrt d)/2: embeddings (t +- y sqrt d)/2, t = 2x + y
    v = _strict_bound(t, d)
    out = [AlgInt(field, (t - y) // 2, y) for y in range(-v, v + 1) if (t - y) % 2 == 0]
    out.sort(key=lambda a: (a.x, a.y))
    return out


@lru_cache(maxsize=None)
def _enumerate_cached(field: QuadField, max_trace: int) -> tuple[AlgInt, ...]:
    out: list[AlgInt] = []
    for t in range(1, max_trace + 1):
        out.extend(totally_positive_of_trace(field, t))
    return tuple(out)


def enumerate_totally_positive(window: TraceWindow | QuadField, max_trace: int | None = None) -> list[AlgInt]:
    """Every totally positive integer of trace <= M in (trace, x, y) order.

    Accepts either a ``TraceWindow`` or ``(field, max_trace)``.
    """
    if isinstance(window, TraceWindow):
        field, max_trace = window.field, window.max_trace
    else:
        field = window
        if max_trace is None:
            raise TypeError("max_trace is required with a bare field")
    if max_trace < 1:
        return []
    return list(_enumerate_cached(field, max_trace))


def decompositions(delta: AlgInt) -> list[tuple[AlgInt, AlgInt]]:
    """Ordered pairs (a, b) of totally positive integers with a + b = delta."""
    if not delta.is_totally_positive():
        raise ValueError(f"{delta} is not totally positive")
    f = delta.field
    limit = delta.trace() - f.min_trace
    return [(a, delta - a) for a in enumerate_totally_positive(f, limit)
            if (delta - a).is_totally_positive()]
