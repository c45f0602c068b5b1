"""Ideals of the ring of integers as Z-lattices in Hermite normal form.

An ideal of a quadratic order is stored as the lower-triangular basis
``[[a, 0], [b, c]]`` over ``{1, w}``, i.e. it is the Z-span of ``a`` and
``b + c*w`` with ``a, c > 0`` and ``0 <= b < a``.  Over Q the lattice has
rank one and ``b = c = 0``.

Ideals are only ever built from generators; nothing here factors them.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable

from .field import AlgInt, FieldMismatch, QuadField


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b == g == gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def hnf(rows: Iterable[tuple[int, int]]) -> tuple[int, int, int]:
    """Hermite normal form ``(a, b, c)`` of the Z-span of 2-vectors ``(x, y)``.

    Returns ``(a, 0, 0)`` when every row has ``y == 0``.
    """
    pivot = None
    xs = []
    for x, y in rows:
        if y == 0:
            xs.append(x)
        elif pivot is None:
            pivot = (x, y)
        else:
            b, c = pivot
            g, s, t = _xgcd(c, y)
            pivot = (s * b + t * x, g)
            # the combination killing the w-coordinate stays in the lattice
            xs.append((y // g) * b - (c // g) * x)
    a = 0
    for x in xs:
        a = gcd(a, x)
    if pivot is None:
        return a, 0, 0
    b, c = pivot
    if c < 0:
        b, c = -b, -c
    if a == 0:
        raise ValueError("lattice is not of full rank")
    return a, b % a, c


@dataclass(frozen=True)
class Ideal:
    field: QuadField
    a: int
    b: int = 0
    c: int = 0

    @property
    def basis(self) -> list[list[int]]:
        if self.field.is_rational:
            return [[self.a]]
        return [[self.a, 0], [self.b, self.c]]

    def basis_elements(self) -> list[AlgInt]:
        if self.field.is_rational:
            return [AlgInt(self.field, self.a, 0)]
        return [AlgInt(self.field, self.a, 0), AlgInt(self.field, self.b, self.c)]

    def index(self) -> int:
        """[O : I], the absolute norm of the ideal."""
        return self.a if self.field.is_rational else self.a * self.c

    def is_unit(self) -> bool:
        return self.index() == 1

    def contains(self, z: AlgInt) -> bool:
        if z.field != self.field:
            raise FieldMismatch(f"{self.field} vs {z.field}")
        if self.field.is_rational:
            return z.x % self.a == 0
        k, r = divmod(z.y, self.c)
        if r:
            return False
        return (z.x - k * self.b) % self.a == 0

    __contains__ = contains

    def __mul__(self, other: "Ideal") -> "Ideal":
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        return ideal_from_generators([u * v for u in self.basis_elements()
                                      for v in other.basis_elements()])

    def __pow__(self, k: int) -> "Ideal":
        if k < 0:
            raise ValueError("negative ideal powers are not supported")
        result = unit_ideal(self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def renormalize(self) -> "Ideal":
        return ideal_from_generators(self.basis_elements())

    def __str__(self):
        gens = ", ".join(str(e) for e in self.basis_elements())
        return f"<{gens}>"


def unit_ideal(field: QuadField) -> Ideal:
    return Ideal(field, 1, 0, 0 if field.is_rational else 1)


def ideal_from_generators(gens: Iterable[AlgInt]) -> Ideal:
    """HNF of the ideal generated by ``gens``.

    The Z-module spanned by ``g`` and ``w*g`` for each generator is already
    closed under multiplication by the ring.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    field = gens[0].field
    rows = []
    for g in gens:
        if g.field != field:
            raise FieldMismatch(f"{field} vs {g.field}")
        rows.append(g.coords())
        if not field.is_rational:
            rows.append((g * field.omega).coords())
    if all(x == 0 and y == 0 for x, y in rows):
        raise ValueError("all generators are zero")
    a, b, c = hnf(rows)
    return Ideal(field, a, b, c)


def principal(z: AlgInt | int, field: QuadField | None = None) -> Ideal:
    if isinstance(z, int):
        z = AlgInt(field, z, 0)
    return ideal_from_generators([z])


def product(i: Ideal, j: Ideal) -> Ideal:
    return i * j


def power(i: Ideal, k: int) -> Ideal:
    return i ** k


def contains(i: Ideal, z: AlgInt) -> bool:
    return i.contains(z)


def valuation(p: Ideal, delta: AlgInt) -> int:
    """Largest k with ``delta`` in ``p**k``.

    This is the p-adic order only when ``p`` is prime; for composite ideals it
    is just the containment depth and is not additive.
    """
    if not delta:
        raise ValueError("valuation of 0 is infinite")
    if p.is_unit():
        raise ValueError("valuation needs a proper ideal")
    k = 0
    pk = p
    # index(p^k) >= 2^k and divides |N(delta)| while delta is in p^k
    while pk.contains(delta):
        k += 1
        pk = pk * p
    return k


@dataclass(frozen=True)
class GlaisherData:
    """An ideal together with a rational integer ``d`` lying in it."""

    a: Ideal
    d: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("d must be a positive integer")
        if not self.a.contains(AlgInt(self.a.field, self.d, 0)):
            raise ValueError(f"{self.d} is not in the ideal {self.a}")

    @property
    def field(self) -> QuadField:
        return self.a.field


def divisibility_depth(delta: AlgInt, d: int) -> tuple[int, AlgInt]:
    """(j, delta / d**j) for the largest j with d**j dividing delta."""
    if d < 2:
        raise ValueError("d must be >= 2")
    j = 0
    while True:
        q = delta.exact_div(d)
        if q is None:
            return j, delta
        j, delta = j + 1, q


def in_glaisher_S(g: GlaisherData, delta: AlgInt) -> bool:
    """Membership in O+ minus the union over j of a(d^j) \\ (d^(j+1))."""
    if g.d == 1:
        # a = O, and a(d^j) \ (d^(j+1)) is empty
        return True
    _, rest = divisibility_depth(delta, g.d)
    return not g.a.contains(rest)


def in_glaisher_S_scan(g: GlaisherData, delta: AlgInt) -> bool:
    """Reference check of S-membership straight from the union definition."""
    field = delta.field
    n = abs(delta.norm())
    bound = 1
    while g.d ** bound <= n:
        bound += 1
    bound += 1
    for j in range(bound + 1):
        dj = principal(g.d ** j, field)
        dj1 = principal(g.d ** (j + 1), field)
        if (g.a * dj).contains(delta) and not dj1.contains(delta):
            return False
    return True
