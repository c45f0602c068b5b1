"""Trace-truncated formal power sums  sum_delta c_delta q^delta.

Exponents are totally nonnegative integers of a field; a ``QSum`` keeps only
exponents of trace <= ``max_trace``.  Trace is additive and positive on
nonzero exponents, so every coefficient inside the window of a product is
determined by coefficients inside the window of the factors.  Windowed
arithmetic is therefore exact, not approximate.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field as dc_field
from typing import Callable, Iterable, Mapping

from .enumeration import enumerate_totally_positive
from .field import AlgInt, QuadField


class WindowMismatch(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class QSum:
    field: QuadField
    max_trace: int
    coeffs: Mapping[AlgInt, int] = dc_field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for k, c in self.coeffs.items():
            if k.field != self.field:
                raise WindowMismatch(f"exponent {k!r} is not in {self.field}")
            if not k.is_totally_nonneg():
                raise ValueError(f"exponent {k} is not totally nonnegative")
            if k.trace() > self.max_trace:
                raise ValueError(f"exponent {k} lies outside the trace window {self.max_trace}")
            if c:
                clean[k] = c
        object.__setattr__(self, "coeffs", clean)

    # construction

    @classmethod
    def from_terms(cls, field: QuadField, max_trace: int, terms: Mapping[AlgInt, int]) -> "QSum":
        """Like the constructor, but silently truncates exponents past the window."""
        acc: dict[AlgInt, int] = defaultdict(int)
        for k, c in terms.items():
            if k.trace() <= max_trace:
                acc[k] += c
        return cls(field, max_trace, acc)

    @classmethod
    def one(cls, field: QuadField, max_trace: int) -> "QSum":
        return cls(field, max_trace, {field.zero: 1})

    @classmethod
    def zero(cls, field: QuadField, max_trace: int) -> "QSum":
        return cls(field, max_trace, {})

    # arithmetic

    def _check(self, other: "QSum"):
        if not isinstance(other, QSum):
            raise TypeError(f"expected QSum, got {type(other).__name__}")
        if other.field != self.field or other.max_trace != self.max_trace:
            raise WindowMismatch(
                f"({self.field}, M={self.max_trace}) vs ({other.field}, M={other.max_trace})")

    def __add__(self, other: "QSum") -> "QSum":
        self._check(other)
        acc = dict(self.coeffs)
        for k, c in other.coeffs.items():
            acc[k] = acc.get(k, 0) + c
        return QSum(self.field, self.max_trace, acc)

    def __neg__(self) -> "QSum":
        return QSum(self.field, self.max_trace, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "QSum") -> "QSum":
        return self + (-other)

    def __mul__(self, other: "QSum") -> "QSum":
        self._check(other)
        small, big = (self, other) if len(self.coeffs) <= len(other.coeffs) else (other, self)
        if not small.coeffs:
            return QSum.zero(self.field, self.max_trace)
        levels: dict[int, list[tuple[AlgInt, int]]] = defaultdict(list)
        for k, c in big.coeffs.items():
            levels[k.trace()].append((k, c))
        M = self.max_trace
        acc: dict[AlgInt, int] = defaultdict(int)
        for a, ca in small.coeffs.items():
            room = M - a.trace()
            for t in range(room + 1):
                for b, cb in levels.get(t, ()):
                    acc[a + b] += ca * cb
        return QSum(self.field, M, acc)

    def coefficient(self, delta: AlgInt) -> int:
        return self.coeffs.get(delta, 0)

    def truncate(self, max_trace: int) -> "QSum":
        return QSum.from_terms(self.field, max_trace, self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, QSum):
            return NotImplemented
        return (self.field == other.field and self.max_trace == other.max_trace
                and self.coeffs == other.coeffs)

    def items(self) -> list[tuple[AlgInt, int]]:
        """Nonzero terms in canonical (trace, x, y) order."""
        return sorted(self.coeffs.items(), key=lambda kv: kv[0].sort_key())

    def __repr__(self):
        terms = " + ".join(f"{c}*q^({k})" for k, c in self.items()) or "0"
        return f"QSum[{self.field}, M={self.max_trace}]({terms})"


def qs_add(f: QSum, g: QSum) -> QSum:
    return f + g


def qs_mul(f: QSum, g: QSum) -> QSum:
    return f * g


def qs_coefficient(f: QSum, delta: AlgInt) -> int:
    return f.coefficient(delta)


def _check_part(delta: AlgInt):
    if not delta.is_totally_positive():
        raise ValueError(f"{delta} is not totally positive")


def geometric_factor(delta: AlgInt, max_trace: int) -> QSum:
    """1 + q^delta + q^(2 delta) + ... cut at the trace window."""
    return bounded_factor(delta, None, max_trace)


def bounded_factor(delta: AlgInt, mult_bound: int | None, max_trace: int) -> QSum:
    """1 + q^delta + ... + q^(k delta), k = mult_bound (None = unbounded)."""
    _check_part(delta)
    t = delta.trace()
    top = max_trace // t
    if mult_bound is not None:
        top = min(top, mult_bound)
    terms = {delta * k: 1 for k in range(top + 1)}
    return QSum(delta.field, max_trace, terms)


def one_minus(delta: AlgInt, max_trace: int) -> QSum:
    """1 - q^delta in the window."""
    _check_part(delta)
    f = delta.field
    return QSum.from_terms(f, max_trace, {f.zero: 1, delta: -1})


def product_over(factors: Iterable[QSum], field: QuadField, max_trace: int) -> QSum:
    result = QSum.one(field, max_trace)
    for f in factors:
        result = result * f
    return result


def partition_genfun(field: QuadField, part_pred: Callable[[AlgInt], bool] | None,
                     mult_bound: int | None, max_trace: int) -> QSum:
    """Product over admissible parts of the (bounded) geometric factor.

    The coefficient at delta is the number of partitions of delta into parts
    satisfying ``part_pred`` (None admits every part) with every multiplicity at most ``mult_bound``.
    """
    parts = [a for a in enumerate_totally_positive(field, max_trace)
             if part_pred is None or part_pred(a)]
    return product_over((bounded_factor(a, mult_bound, max_trace) for a in parts),
                        field, max_trace)


def nonneg_multiples_sum(field: QuadField, i: int, max_trace: int, *, skip_zero: bool = False) -> QSum:
    """sum over alpha >= 0 (totally) of q^(i alpha), cut at the window."""
    terms = {} if skip_zero else {field.zero: 1}
    for a in enumerate_totally_positive(field, max_trace // i):
        terms[a * i] = 1
    return QSum(field, max_trace, terms)


def weighted_solutions_genfun(field: QuadField, m: int, max_trace: int, *, exact: bool = False) -> QSum:
    """Generating function of solutions to delta = x_1 + 2 x_2 + ... + m x_m.

    Every x_i ranges over the totally nonnegative integers.  With ``exact``
    the last variable x_m is required to be nonzero.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    factors = [nonneg_multiples_sum(field, i, max_trace, skip_zero=exact and i == m)
               for i in range(1, m + 1)]
    return product_over(factors, field, max_trace)
