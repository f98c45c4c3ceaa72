"""Exact arithmetic in Q(sqrt 3) and points of the plane over it."""
from __future__ import annotations

import math
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import total_ordering
from typing import Union

Rational = Union[int, Fraction]


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings; floats are refused."""
    if isinstance(value, bool):
        raise TypeError("booleans are not exact rationals")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in ".eE"):
            raise ValueError(f"expected an integer or P/Q literal, got {value!r}")
        return Fraction(text)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def fraction_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _sign(a: Fraction, b: Fraction) -> int:
    """Sign of ``a + b*sqrt(3)``."""
    sa = (a > 0) - (a < 0)
    sb = (b > 0) - (b < 0)
    if sa == sb or sb == 0:
        return sa
    if sa == 0:
        return sb
    # opposite signs: compare a^2 with 3 b^2
    diff = a * a - 3 * b * b
    return sa if diff > 0 else sb


@total_ordering
class QR3:
    """The number ``a + b*sqrt(3)`` with rational ``a`` and ``b``."""

    __slots__ = ("a", "b")

    def __init__(self, a: Rational = 0, b: Rational = 0):
        object.__setattr__(self, "a", as_fraction(a))
        object.__setattr__(self, "b", as_fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("QR3 is immutable")

    @classmethod
    def coerce(cls, value) -> "QR3":
        return value if isinstance(value, QR3) else cls(value)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def __add__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return QR3(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return QR3(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return QR3(self.a * other.a + 3 * self.b * other.b, self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # only rational divisors; general division is not part of the surface
        if isinstance(other, QR3):
            if other.b != 0:
                raise TypeError("division by an irrational QR3 is not supported")
            other = other.a
        if not isinstance(other, (int, Fraction)) or isinstance(other, bool):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("QR3 division by zero")
        return QR3(self.a / other, self.b / other)

    def __neg__(self):
        return QR3(-self.a, -self.b)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def sign(self) -> int:
        return _sign(self.a, self.b)

    def conjugate(self) -> "QR3":
        return QR3(self.a, -self.b)

    def __eq__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return self.a == other.a and self.b == other.b

    def __lt__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return _sign(self.a - other.a, self.b - other.b) < 0

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __floor__(self) -> int:
        return self.floor()

    def floor(self) -> int:
        """Greatest integer not exceeding the value, computed without rounding."""
        den = math.lcm(self.a.denominator, self.b.denominator)
        num_a = self.a.numerator * (den // self.a.denominator)
        num_b = self.b.numerator * (den // self.b.denominator)
        if num_b == 0:
            return num_a // den
        root = math.isqrt(3 * num_b * num_b)
        # num_b * sqrt(3) is irrational, so it lies strictly inside (f, f + 1)
        f = root if num_b > 0 else -root - 1
        return (num_a + f) // den

    def to_decimal(self, digits: int = 50) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = digits + 10
            value = (Decimal(self.a.numerator) / Decimal(self.a.denominator)
                     + Decimal(self.b.numerator) / Decimal(self.b.denominator) * Decimal(3).sqrt())
            ctx.prec = digits
            return +value

    def __float__(self):
        return float(self.to_decimal(30))

    def format(self, places: int = 12) -> str:
        """Fixed-point decimal string with ``places`` digits after the point."""
        value = self.to_decimal(places + 40)
        return f"{value.quantize(Decimal(1).scaleb(-places)):.{places}f}"

    def to_json(self) -> dict:
        return {"a": fraction_str(self.a), "b": fraction_str(self.b)}

    @classmethod
    def from_json(cls, obj: dict) -> "QR3":
        return cls(as_fraction(obj["a"]), as_fraction(obj["b"]))

    def __repr__(self):
        if self.b == 0:
            return f"QR3({self.a})"
        return f"QR3({self.a}, {self.b})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt3"
        op = "+" if self.b > 0 else "-"
        return f"{self.a} {op} {abs(self.b)}*sqrt3"


def _lift(value):
    if isinstance(value, QR3):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return QR3(value)
    return NotImplemented


ZERO = QR3(0)
ONE = QR3(1)
SQRT3 = QR3(0, 1)
HALF_SQRT3 = QR3(0, Fraction(1, 2))


class PointE2:
    """A point of the plane with coordinates in Q(sqrt 3)."""

    __slots__ = ("x", "y")

    def __init__(self, x, y):
        object.__setattr__(self, "x", QR3.coerce(x))
        object.__setattr__(self, "y", QR3.coerce(y))

    def __setattr__(self, name, value):
        raise AttributeError("PointE2 is immutable")

    def __add__(self, other: "PointE2") -> "PointE2":
        return PointE2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "PointE2") -> "PointE2":
        return PointE2(self.x - other.x, self.y - other.y)

    def scale(self, factor) -> "PointE2":
        return PointE2(self.x * factor, self.y * factor)

    def dot(self, other: "PointE2") -> QR3:
        return self.x * other.x + self.y * other.y

    def norm2(self) -> QR3:
        return self.dot(self)

    def __eq__(self, other):
        if not isinstance(other, PointE2):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x, self.y))

    def __iter__(self):
        return iter((self.x, self.y))

    def __repr__(self):
        return f"PointE2({self.x}, {self.y})"

    def to_json(self) -> dict:
        return {"x": self.x.to_json(), "y": self.y.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "PointE2":
        return cls(QR3.from_json(obj["x"]), QR3.from_json(obj["y"]))


def squared_distance(p: PointE2, q: PointE2) -> QR3:
    return (p - q).norm2()


def in_unit_square(p: PointE2) -> bool:
    return ZERO <= p.x <= ONE and ZERO <= p.y <= ONE
