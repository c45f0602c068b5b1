"""Direct enumeration of partitions and chain partitions.

Everything in this module walks the combinatorial objects themselves; it is
the brute-force counterpart of the generating functions in ``qsum``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .enumeration import enumerate_totally_positive
from .field import AlgInt
from .qsum import weighted_solutions_genfun

PartPredicate = Callable[[AlgInt], bool]


def _all_parts(_: AlgInt) -> bool:
    return True


@dataclass(frozen=True)
class Partition:
    """A multiset of totally positive parts, kept in descending canonical order."""

    parts: tuple[AlgInt, ...]

    def __post_init__(self):
        for p in self.parts:
            if not p.is_totally_positive():
                raise ValueError(f"part {p} is not totally positive")
        ordered = tuple(sorted(self.parts, key=AlgInt.sort_key, reverse=True))
        object.__setattr__(self, "parts", ordered)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def total(self, field) -> AlgInt:
        s = field.zero
        for p in self.parts:
            s = s + p
        return s

    def ascending(self) -> tuple[AlgInt, ...]:
        return self.parts[::-1]

    def is_distinct(self) -> bool:
        return len(set(self.parts)) == len(self.parts)

    def __str__(self):
        return "(" + ", ".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True)
class ChainSolution:
    """(x_1, ..., x_m), each totally nonnegative."""

    xs: tuple[AlgInt, ...]

    def __post_init__(self):
        object.__setattr__(self, "xs", tuple(self.xs))
        for x in self.xs:
            if not x.is_totally_nonneg():
                raise ValueError(f"{x} is not totally nonnegative")

    def weighted_sum(self) -> AlgInt:
        total = self.xs[0].field.zero
        for i, x in enumerate(self.xs, start=1):
            total = total + x * i
        return total

    def __str__(self):
        return "(" + ", ".join(str(x) for x in self.xs) + ")"


def _admissible(delta: AlgInt, part_pred: PartPredicate | None) -> list[AlgInt]:
    pred = part_pred or _all_parts
    cands = [a for a in enumerate_totally_positive(delta.field, delta.trace()) if pred(a)]
    cands.reverse()
    return cands


def _check_target(delta: AlgInt):
    if delta and not delta.is_totally_positive():
        raise ValueError(f"{delta} is not totally positive")


def iter_partitions(delta: AlgInt, part_pred: PartPredicate | None = None,
                    mult_bound: int | None = None) -> Iterator[Partition]:
    _check_target(delta)
    cands = _admissible(delta, part_pred)

    def rec(rem: AlgInt, start: int, acc: list[AlgInt]):
        if not rem:
            yield Partition(tuple(acc))
            return
        rt = rem.trace()
        for j in range(start, len(cands)):
            c = cands[j]
            if c.trace() > rt:
                continue
            r, k = rem, 0
            while mult_bound is None or k < mult_bound:
                r = r - c
                if not r.is_totally_nonneg():
                    break
                k += 1
                yield from rec(r, j + 1, acc + [c] * k)

    yield from rec(delta, 0, [])


def enumerate_partitions(delta: AlgInt, part_pred: PartPredicate | None = None,
                         mult_bound: int | None = None) -> list[Partition]:
    """All partitions of delta into admissible parts, each used at most ``mult_bound`` times.

    Sorted lexicographically on the descending part sequence, largest first.
    """
    out = list(iter_partitions(delta, part_pred, mult_bound))
    out.sort(key=lambda p: [a.sort_key() for a in p.parts], reverse=True)
    return out


def count_partitions(delta: AlgInt, part_pred: PartPredicate | None = None,
                     mult_bound: int | None = None) -> int:
    """Same count as ``len(enumerate_partitions(...))``, memoized on (remainder, part index)."""
    _check_target(delta)
    cands = _admissible(delta, part_pred)
    memo: dict[tuple[AlgInt, int], int] = {}

    def rec(rem: AlgInt, i: int) -> int:
        if not rem:
            return 1
        if i == len(cands):
            return 0
        key = (rem, i)
        if key in memo:
            return memo[key]
        c = cands[i]
        total = rec(rem, i + 1)
        r, k = rem, 0
        while mult_bound is None or k < mult_bound:
            r = r - c
            if not r.is_totally_nonneg():
                break
            k += 1
            total += rec(r, i + 1)
        memo[key] = total
        return total

    return rec(delta, 0)


# chain partitions

def is_chain(parts: Sequence[AlgInt]) -> bool:
    """Consecutive differences (as given, read left to right) are all >= 0 totally."""
    return all((parts[i + 1] - parts[i]).is_totally_nonneg() for i in range(len(parts) - 1))


def is_chain_partition(p: Partition) -> bool:
    return is_chain(p.ascending())


def _max_parts(delta: AlgInt) -> int:
    return delta.trace() // delta.field.min_trace


def iter_chains(delta: AlgInt, max_parts: int | None = None,
                exact: bool = False) -> Iterator[tuple[AlgInt, ...]]:
    """Chain partitions of delta in ascending arrangement.

    ``max_parts`` bounds the number of parts (None = no bound); with ``exact``
    only chains with exactly ``max_parts`` parts are produced.
    """
    if not delta.is_totally_positive():
        raise ValueError(f"{delta} is not totally positive")
    if exact and max_parts is None:
        raise ValueError("exact needs max_parts")
    cap = _max_parts(delta) if max_parts is None else max_parts
    cands = enumerate_totally_positive(delta.field, delta.trace())

    def rec(rem: AlgInt, prev: AlgInt | None, acc: tuple[AlgInt, ...]):
        if not rem:
            if not exact or len(acc) == cap:
                yield acc
            return
        if len(acc) == cap:
            return
        rt = rem.trace()
        for a in cands:
            if a.trace() > rt:
                break
            if prev is not None and not (a - prev).is_totally_nonneg():
                continue
            r = rem - a
            if r.is_totally_nonneg():
                yield from rec(r, a, acc + (a,))

    yield from rec(delta, None, ())


def enumerate_chains(delta: AlgInt, max_parts: int | None = None,
                     exact: bool = False) -> list[tuple[AlgInt, ...]]:
    return list(iter_chains(delta, max_parts, exact))


def count_chain(delta: AlgInt, m: int | None = None, exact: bool = False) -> int:
    """Chain partitions of delta with at most m parts (exactly m with ``exact``)."""
    return sum(1 for _ in iter_chains(delta, m, exact))


def phi(chain: Sequence[AlgInt], m: int) -> ChainSolution:
    """Ascending chain (l_1..l_r) -> (l_r - l_(r-1), ..., l_2 - l_1, l_1, 0, ..., 0) of length m."""
    chain = tuple(chain)
    r = len(chain)
    if r == 0:
        raise ValueError("empty chain")
    if r > m:
        raise ValueError(f"chain has {r} parts, more than m = {m}")
    if not is_chain(chain) or not chain[0].is_totally_positive():
        raise ValueError("input is not a chain partition in ascending arrangement")
    zero = chain[0].field.zero
    xs = [chain[r - 1 - i] - chain[r - 2 - i] for i in range(r - 1)] + [chain[0]]
    return ChainSolution(tuple(xs) + (zero,) * (m - r))


def psi(sol: ChainSolution | Sequence[AlgInt]) -> tuple[AlgInt, ...]:
    """(mu_1..mu_m) -> ascending chain (mu_r, mu_(r-1)+mu_r, ..., mu_1+...+mu_r)."""
    xs = sol.xs if isinstance(sol, ChainSolution) else tuple(sol)
    nonzero = [i for i, x in enumerate(xs) if x]
    if not nonzero:
        raise ValueError("psi is undefined on the all-zero tuple")
    r = nonzero[-1] + 1
    out = []
    s = xs[0].field.zero
    for k in range(r - 1, -1, -1):
        s = s + xs[k]
        out.append(s)
    return tuple(out)


def iter_weighted_solutions(delta: AlgInt, m: int, exact: bool = False) -> Iterator[ChainSolution]:
    """Brute-force solutions of delta = x_1 + 2 x_2 + ... + m x_m, x_i >= 0 totally."""
    if m < 1:
        raise ValueError("m must be >= 1")
    field = delta.field

    def choices(rem: AlgInt, i: int, allow_zero: bool):
        if allow_zero:
            yield field.zero
        for a in enumerate_totally_positive(field, rem.trace() // i):
            if (rem - a * i).is_totally_nonneg():
                yield a

    def rec(rem: AlgInt, i: int, tail: tuple[AlgInt, ...]):
        if i == 1:
            if rem.is_totally_nonneg():
                yield ChainSolution((rem,) + tail)
            return
        for x in choices(rem, i, not (exact and i == m)):
            yield from rec(rem - x * i, i - 1, (x,) + tail)

    if exact and m == 1:
        if delta.is_totally_positive():
            yield ChainSolution((delta,))
        return
    yield from rec(delta, m, ())


def enumerate_weighted_solutions(delta: AlgInt, m: int, exact: bool = False) -> list[ChainSolution]:
    return list(iter_weighted_solutions(delta, m, exact))


def count_weighted_solutions(delta: AlgInt, m: int, exact: bool = False) -> int:
    """Solution count read off the q-sum product of sum_{a >= 0} q^(i a), i = 1..m."""
    if not delta.is_totally_positive():
        raise ValueError(f"{delta} is not totally positive")
    gf = weighted_solutions_genfun(delta.field, m, delta.trace(), exact=exact)
    return gf.coefficient(delta)
