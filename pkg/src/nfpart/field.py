"""Exact arithmetic in the ring of integers of Q or a real quadratic field.

Elements are stored in integral-basis coordinates ``x + y*w`` where

* ``w = sqrt(d)``        when d = 2, 3 (mod 4),
* ``w = (1 + sqrt(d))/2`` when d = 1 (mod 4),
* ``w`` is absent (y == 0) for Q, which is selected with ``d = 1``.

Nothing here touches floating point; positivity of the real embeddings is
decided by integer sign tests.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property


class FieldMismatch(ValueError):
    pass


def is_squarefree(n: int) -> bool:
    if n < 1:
        return False
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class QuadField:
    """Q(sqrt(d)) for squarefree d > 1, or Q itself for d == 1."""

    d: int

    def __post_init__(self):
        if not isinstance(self.d, int) or not is_squarefree(self.d):
            raise ValueError(f"d must be a squarefree positive integer, got {self.d!r}")

    @property
    def is_rational(self) -> bool:
        return self.d == 1

    @property
    def degree(self) -> int:
        return 1 if self.d == 1 else 2

    @property
    def omega_kind(self) -> str | None:
        if self.d == 1:
            return None
        return "half" if self.d % 4 == 1 else "sqrt"

    @property
    def trace_omega(self) -> int:
        return 1 if self.omega_kind == "half" else 0

    @property
    def norm_omega(self) -> int:
        # w*w' ; (1+s)(1-s)/4 = (1-d)/4 for the half-integral basis
        if self.omega_kind == "half":
            return (1 - self.d) // 4
        return -self.d

    @property
    def min_trace(self) -> int:
        """Smallest trace of a totally positive element."""
        return self.degree

    def __call__(self, x: int = 0, y: int = 0) -> "AlgInt":
        return AlgInt(self, x, y)

    @cached_property
    def one(self) -> "AlgInt":
        return AlgInt(self, 1, 0)

    @cached_property
    def zero(self) -> "AlgInt":
        return AlgInt(self, 0, 0)

    @cached_property
    def omega(self) -> "AlgInt":
        if self.is_rational:
            raise ValueError("Q has no w")
        return AlgInt(self, 0, 1)

    def __str__(self):
        return "Q" if self.d == 1 else f"Q(√{self.d})"

    def parse(self, text: str) -> "AlgInt":
        return parse_element(self, text)


@dataclass(frozen=True, eq=False, slots=True)
class AlgInt:
    """The algebraic integer ``x + y*w`` of ``field``."""

    field: QuadField
    x: int
    y: int = 0

    def __post_init__(self):
        if self.field.is_rational and self.y != 0:
            raise ValueError("elements of Q have y == 0")

    # equality/hash by coordinates; the field is compared but kept out of the hash
    def __eq__(self, other):
        if isinstance(other, AlgInt):
            return self.x == other.x and self.y == other.y and self.field == other.field
        if isinstance(other, int):
            return self.y == 0 and self.x == other
        return NotImplemented

    def __hash__(self):
        return hash((self.x, self.y))

    def _coerce(self, other) -> "AlgInt":
        if isinstance(other, AlgInt):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, int):
            return AlgInt(self.field, other, 0)
        raise TypeError(f"cannot combine AlgInt with {type(other).__name__}")

    def __add__(self, other):
        o = self._coerce(other)
        return AlgInt(self.field, self.x + o.x, self.y + o.y)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return AlgInt(self.field, self.x - o.x, self.y - o.y)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return AlgInt(self.field, -self.x, -self.y)

    def __mul__(self, other):
        o = self._coerce(other)
        f = self.field
        # w^2 = tr(w) w - N(w)
        yy = self.y * o.y
        x = self.x * o.x - f.norm_omega * yy
        y = self.x * o.y + self.y * o.x + f.trace_omega * yy
        return AlgInt(f, x, y)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not integral in general")
        result, base = self.field.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return self.x != 0 or self.y != 0

    def conjugate(self) -> "AlgInt":
        if self.field.omega_kind == "half":
            # w' = 1 - w
            return AlgInt(self.field, self.x + self.y, -self.y)
        return AlgInt(self.field, self.x, -self.y)

    def trace(self) -> int:
        if self.field.is_rational:
            return self.x
        return 2 * self.x + self.y * self.field.trace_omega

    def norm(self) -> int:
        if self.field.is_rational:
            return self.x
        f = self.field
        # N(x + y w) = x^2 + x y tr(w) + y^2 N(w)
        return self.x * self.x + self.x * self.y * f.trace_omega + self.y * self.y * f.norm_omega

    def is_totally_positive(self) -> bool:
        f = self.field
        if f.is_rational:
            return self.x > 0
        # both embeddings are (u +- v sqrt d)/s with s in {1, 2}
        if f.omega_kind == "half":
            u, v = 2 * self.x + self.y, self.y
        else:
            u, v = self.x, self.y
        return u > 0 and u * u > f.d * v * v

    def is_totally_nonneg(self) -> bool:
        return not self or self.is_totally_positive()

    def sort_key(self) -> tuple[int, int, int]:
        return (self.trace(), self.x, self.y)

    def exact_div(self, other) -> "AlgInt | None":
        b = self._coerce(other)
        if not b:
            raise ZeroDivisionError("exact_div by zero")
        if self.field.is_rational:
            q, r = divmod(self.x, b.x)
            return None if r else AlgInt(self.field, q, 0)
        n = b.norm()
        num = self * b.conjugate()
        if num.x % n or num.y % n:
            return None
        return AlgInt(self.field, num.x // n, num.y // n)

    def coords(self) -> tuple[int, int]:
        return (self.x, self.y)

    def literal(self) -> str:
        """Element literal in the ``INT+INT*w`` input grammar."""
        if self.y == 0:
            return str(self.x)
        sign = "+" if self.y > 0 else "-"
        return f"{self.x}{sign}{abs(self.y)}*w"

    def __repr__(self):
        return f"AlgInt({self.field.d}, {self.x}, {self.y})"

    def __str__(self):
        return display(self)


def _surd(coef: int, d: int) -> str:
    if coef == 1:
        return f"√{d}"
    if coef == -1:
        return f"-√{d}"
    return f"{coef}√{d}"


def _linear(u: int, v: int, d: int) -> str:
    if v == 0:
        return str(u)
    if u == 0:
        return _surd(v, d)
    body = _surd(abs(v), d)
    return f"{u}{'+' if v > 0 else '-'}{body}"


def display(a: AlgInt) -> str:
    """Render with sqrt notation, e.g. ``6+2√2`` or ``(1+√5)/2``."""
    f = a.field
    if f.is_rational:
        return str(a.x)
    if f.omega_kind == "sqrt":
        return _linear(a.x, a.y, f.d)
    u, v = 2 * a.x + a.y, a.y
    if v % 2 == 0:
        return _linear(u // 2, v // 2, f.d)
    return f"({_linear(u, v, f.d)})/2"


_TERM = re.compile(r"\s*([+-]?)\s*(\d*)\s*(\*?\s*w)?\s*")


class ParseError(ValueError):
    def __init__(self, text: str, pos: int, msg: str):
        super().__init__(f"{msg} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


def parse_element(field: QuadField, text: str) -> AlgInt:
    """Parse ``INT``, ``INT+INT*w``, ``INT-INT*w`` (also ``w``, ``3w``, ``x,y``)."""
    s = text.strip()
    if "," in s:
        parts = s.split(",")
        if len(parts) != 2:
            raise ParseError(text, s.index(",", s.index(",") + 1), "expected 'x,y'")
        try:
            x, y = (int(p) for p in parts)
        except ValueError:
            raise ParseError(text, 0, "non-integer coordinate") from None
        if field.is_rational and y:
            raise ParseError(text, s.index(",") + 1, "Q elements have y = 0")
        return AlgInt(field, x, y)
    if not s:
        raise ParseError(text, 0, "empty element literal")
    x = y = 0
    pos = 0
    seen_const = seen_w = False
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, digits, wpart = m.group(1), m.group(2), m.group(3)
        if m.end() == pos or not (digits or wpart):
            raise ParseError(text, pos, "unexpected character")
        if pos > 0 and not sign:
            raise ParseError(text, pos, "expected '+' or '-'")
        if m.end() < len(s) and s[m.end()] not in "+-":
            raise ParseError(text, m.end(), "unexpected character")
        value = int(digits) if digits else 1
        if sign == "-":
            value = -value
        if wpart:
            if field.is_rational:
                raise ParseError(text, pos, "w is not defined over Q")
            if seen_w:
                raise ParseError(text, pos, "repeated w term")
            seen_w, y = True, value
        else:
            if seen_const:
                raise ParseError(text, pos, "repeated constant term")
            seen_const, x = True, value
        pos = m.end()
    return AlgInt(field, x, y)


def add(a: AlgInt, b: AlgInt) -> AlgInt:
    return a + b


def sub(a: AlgInt, b: AlgInt) -> AlgInt:
    return a - b


def mul(a: AlgInt, b: AlgInt) -> AlgInt:
    return a * b


def trace(a: AlgInt) -> int:
    return a.trace()


def norm(a: AlgInt) -> int:
    return a.norm()


def conjugate(a: AlgInt) -> AlgInt:
    return a.conjugate()


def is_totally_positive(a: AlgInt) -> bool:
    return a.is_totally_positive()


def is_totally_nonneg(a: AlgInt) -> bool:
    return a.is_totally_nonneg()


def exact_div(a: AlgInt, b: AlgInt) -> AlgInt | None:
    return a.exact_div(b)


