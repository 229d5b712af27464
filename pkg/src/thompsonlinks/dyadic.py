"""Exact dyadic rationals k/2^m restricted to the unit interval.

Values are kept in lowest terms and bounded by a fixed bit width so that
runaway subdivisions surface as errors instead of silently growing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

__all__ = ["Dyadic", "digit_sum", "arith", "MAX_EXPONENT"]

MAX_EXPONENT = 62


@dataclass(frozen=True, order=False)
class Dyadic:
    numerator: int
    exponent: int

    def __post_init__(self) -> None:
        n, e = self.numerator, self.exponent
        if n < 0 or e < 0:
            raise ValueError(f"negative dyadic component {n}/2^{e}")
        if n == 0 and e != 0:
            raise ValueError("zero must be stored as 0/2^0")
        if n != 0 and n % 2 == 0 and e != 0:
            raise ValueError(f"{n}/2^{e} is not in lowest terms")
        if e > MAX_EXPONENT:
            raise OverflowError(f"dyadic exponent {e} exceeds {MAX_EXPONENT}")
        if n > (1 << e):
            raise ValueError(f"{n}/2^{e} lies outside [0, 1]")

    @classmethod
    def make(cls, numerator: int, exponent: int = 0) -> "Dyadic":
        """Normalize numerator/2^exponent to lowest terms."""
        if numerator == 0:
            return cls(0, 0)
        while numerator % 2 == 0 and exponent > 0:
            numerator //= 2
            exponent -= 1
        if exponent < 0:
            numerator <<= -exponent
            exponent = 0
        return cls(numerator, exponent)

    @classmethod
    def from_fraction(cls, value: Fraction) -> "Dyadic":
        den = value.denominator
        if den & (den - 1):
            raise ValueError(f"{value} is not dyadic")
        return cls.make(value.numerator, den.bit_length() - 1)

    @classmethod
    def parse(cls, text: str) -> "Dyadic":
        """Accept "k/2^m", "k/d" with d a power of two, ".0101" or an integer."""
        s = text.strip()
        m = re.fullmatch(r"(\d+)/2\^(\d+)", s)
        if m:
            return cls.make(int(m.group(1)), int(m.group(2)))
        m = re.fullmatch(r"0?\.([01]*)", s)
        if m:
            bits = m.group(1)
            return cls.make(int(bits, 2) if bits else 0, len(bits))
        m = re.fullmatch(r"(\d+)(?:/(\d+))?", s)
        if m:
            return cls.from_fraction(Fraction(int(m.group(1)), int(m.group(2) or 1)))
        raise ValueError(f"cannot parse dyadic {text!r}")

    def to_fraction(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.exponent)

    def binary(self) -> str:
        """Finite binary expansion such as ".011"; 1 is written "1"."""
        if self.numerator == 1 << self.exponent:
            return "1"
        if self.exponent == 0:
            return ".0"
        return "." + format(self.numerator, "b").zfill(self.exponent)

    def __str__(self) -> str:
        return f"{self.numerator}/2^{self.exponent}"

    def __lt__(self, other: "Dyadic") -> bool:
        return _cmp(self, other) < 0

    def __le__(self, other: "Dyadic") -> bool:
        return _cmp(self, other) <= 0

    def __gt__(self, other: "Dyadic") -> bool:
        return _cmp(self, other) > 0

    def __ge__(self, other: "Dyadic") -> bool:
        return _cmp(self, other) >= 0

    def __add__(self, other: "Dyadic") -> "Dyadic":
        e = max(self.exponent, other.exponent)
        return Dyadic.make(_scaled(self, e) + _scaled(other, e), e)

    def __sub__(self, other: "Dyadic") -> "Dyadic":
        e = max(self.exponent, other.exponent)
        diff = _scaled(self, e) - _scaled(other, e)
        if diff < 0:
            raise ArithmeticError(f"dyadic underflow: {self} - {other}")
        return Dyadic.make(diff, e)

    def half(self) -> "Dyadic":
        return Dyadic.make(self.numerator, self.exponent + 1)

    def double(self) -> "Dyadic":
        return Dyadic.make(self.numerator * 2, self.exponent)


ZERO = Dyadic(0, 0)
ONE = Dyadic(1, 0)
HALF = Dyadic(1, 1)


def _scaled(d: Dyadic, e: int) -> int:
    return d.numerator << (e - d.exponent)


def _cmp(a: Dyadic, b: Dyadic) -> int:
    e = max(a.exponent, b.exponent)
    x, y = _scaled(a, e), _scaled(b, e)
    return (x > y) - (x < y)


def digit_sum(d: Dyadic) -> int:
    """Number of ones in the finite binary expansion of d in [0, 1].

    The value 1 is read as the one-digit expansion "1".
    """
    return bin(d.numerator).count("1")


def arith(a: Dyadic, b: Dyadic | None, kind: str) -> Dyadic | int:
    """Dispatch helper: add, sub, half, double, or compare (returns -1/0/1)."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "half":
        return a.half()
    if kind == "double":
        return a.double()
    if kind == "compare":
        return _cmp(a, b)
    raise ValueError(f"unknown dyadic operation {kind!r}")
