"""Binary points, the four Boolean laws and exact rational times."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .errors import ParseError, WidthError

MAX_WIDTH = 64

Rat = Fraction
RatLike = Union[Fraction, int, str]


@dataclass(frozen=True, order=False)
class Point:
    """A value in {0,1}^n. bits[0] is coordinate 1."""

    bits: tuple

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if not 1 <= len(bits) <= MAX_WIDTH:
            raise WidthError(f"width must be in 1..{MAX_WIDTH}, got {len(bits)}")
        if any(b not in (0, 1) for b in bits):
            raise ValueError("bits must be 0 or 1")
        object.__setattr__(self, "bits", bits)

    @property
    def width(self) -> int:
        return len(self.bits)

    @classmethod
    def parse(cls, text: str) -> "Point":
        s = text.strip()
        if not s or any(c not in "01" for c in s):
            raise ParseError(f"bad point literal {text!r}")
        if len(s) > MAX_WIDTH:
            raise WidthError(f"width {len(s)} exceeds {MAX_WIDTH}")
        return cls(tuple(int(c) for c in s))

    @classmethod
    def zeros(cls, n: int) -> "Point":
        return cls((0,) * n)

    @classmethod
    def ones(cls, n: int) -> "Point":
        return cls((1,) * n)

    @classmethod
    def from_int(cls, value: int, n: int) -> "Point":
        return cls(tuple((value >> (n - 1 - i)) & 1 for i in range(n)))

    def to_int(self) -> int:
        v = 0
        for b in self.bits:
            v = (v << 1) | b
        return v

    def __str__(self) -> str:
        return "".join(map(str, self.bits))

    def __repr__(self) -> str:
        return f"Point('{self}')"

    def __lt__(self, other: "Point") -> bool:
        return (self.width, str(self)) < (other.width, str(other))

    def __getitem__(self, i: int) -> int:
        return self.bits[i]


def pt(text: str) -> Point:
    """Shorthand for Point.parse."""
    return Point.parse(text)


_LAWS = {
    "and": lambda a, b: a & b,
    "or": lambda a, b: a | b,
    "xor": lambda a, b: a ^ b,
}


def point_componentwise(op: str, a: Point, b: Optional[Point] = None) -> Point:
    """Apply not/and/or/xor coordinate by coordinate."""
    if op == "not":
        if b is not None:
            raise ValueError("not takes one operand")
        return Point(tuple(1 - x for x in a.bits))
    if op not in _LAWS:
        raise ValueError(f"unknown op {op!r}")
    if b is None:
        raise ValueError(f"{op} needs two operands")
    if a.width != b.width:
        raise WidthError(f"width mismatch {a.width} vs {b.width}")
    f = _LAWS[op]
    return Point(tuple(f(x, y) for x, y in zip(a.bits, b.bits)))


def check_width(n: int, points: Iterable[Point]) -> None:
    for p in points:
        if p.width != n:
            raise WidthError(f"point {p} has width {p.width}, expected {n}")


def parse_rat(text: RatLike) -> Fraction:
    """Parse "p/q", an integer or a decimal literal into an exact Fraction."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, float):
        raise TypeError("floats are not accepted as times; use a string")
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational literal {text!r}") from exc


def format_rat(r: Fraction) -> str:
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


@dataclass(frozen=True)
class TimeSet:
    """Simple time sets: empty, [start, inf), (-inf, start) or everything.

    For discrete time "from" means {start, start+1, ...} and "all" means N_.
    """

    kind: str
    start: Optional[Union[int, Fraction]] = None

    @classmethod
    def empty(cls) -> "TimeSet":
        return cls("empty")

    @classmethod
    def all(cls) -> "TimeSet":
        return cls("all")

    @classmethod
    def since(cls, t) -> "TimeSet":
        return cls("from", t)

    @classmethod
    def upto(cls, t) -> "TimeSet":
        return cls("upto", t)

    def __contains__(self, t) -> bool:
        if self.kind == "all":
            return True
        if self.kind == "from":
            return t >= self.start
        if self.kind == "upto":
            return t < self.start
        return False

    def describe(self) -> str:
        if self.kind == "empty":
            return "empty"
        if self.kind == "all":
            return "all"
        if self.kind == "from":
            return f"[{format_rat(self.start)}, inf)"
        return f"(-inf, {format_rat(self.start)})"
