"""Exact dyadic rationals a / 2^e.

Weights of partial maps are powers of 1/2 and all identities in the analysis
module are exact, so floating point is never used.  Values are kept in lowest
terms: either the exponent is 0 or the numerator is odd.  The numerator is a
signed arbitrary-precision int; differences of weights may be negative.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True, order=False)
class Dyadic:
    numerator: int
    exponent: int

    def __post_init__(self) -> None:
        if self.exponent < 0:
            raise ValueError("exponent must be >= 0")
        num, exp = self.numerator, self.exponent
        if num == 0:
            exp = 0
        else:
            while exp > 0 and num % 2 == 0:
                num //= 2
                exp -= 1
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "exponent", exp)

    # a1/2^e1 + a2/2^e2 = (a1*2^(e-e1) + a2*2^(e-e2)) / 2^e with e = max(e1, e2)
    def __add__(self, other: "Dyadic | int") -> "Dyadic":
        other = _coerce(other)
        e = max(self.exponent, other.exponent)
        num = (self.numerator << (e - self.exponent)) + (other.numerator << (e - other.exponent))
        return Dyadic(num, e)

    def __radd__(self, other: int) -> "Dyadic":
        return self.__add__(other)

    def __sub__(self, other: "Dyadic | int") -> "Dyadic":
        return self.__add__(-_coerce(other))

    def __rsub__(self, other: int) -> "Dyadic":
        return _coerce(other).__sub__(self)

    def __neg__(self) -> "Dyadic":
        return Dyadic(-self.numerator, self.exponent)

    def __mul__(self, other: "Dyadic | int") -> "Dyadic":
        other = _coerce(other)
        return Dyadic(self.numerator * other.numerator, self.exponent + other.exponent)

    def __rmul__(self, other: int) -> "Dyadic":
        return self.__mul__(other)

    def _cmp(self, other: "Dyadic | int") -> int:
        other = _coerce(other)
        lhs = self.numerator << other.exponent
        rhs = other.numerator << self.exponent
        return (lhs > rhs) - (lhs < rhs)

    def __lt__(self, other: "Dyadic | int") -> bool:
        return self._cmp(other) < 0

    def __le__(self, other: "Dyadic | int") -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other: "Dyadic | int") -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other: "Dyadic | int") -> bool:
        return self._cmp(other) >= 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Dyadic(other, 0)
        if not isinstance(other, Dyadic):
            return NotImplemented
        return self.numerator == other.numerator and self.exponent == other.exponent

    def __hash__(self) -> int:
        return hash(self.as_fraction())

    def is_integer(self) -> bool:
        return self.exponent == 0

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.exponent)

    def __str__(self) -> str:
        if self.exponent == 0:
            return str(self.numerator)
        return f"{self.numerator}/{1 << self.exponent}"

    def __repr__(self) -> str:
        return f"Dyadic({self.numerator}, {self.exponent})"

    @classmethod
    def parse(cls, text: str) -> "Dyadic":
        """Inverse of str(): "1", "-3/8", "5/4". The denominator must be a power of two."""
        text = text.strip()
        if "/" in text:
            num_s, den_s = text.split("/", 1)
            num, den = int(num_s), int(den_s)
            if den <= 0 or den & (den - 1):
                raise ValueError(f"denominator {den} is not a power of two")
            return cls(num, den.bit_length() - 1)
        return cls(int(text), 0)


ZERO = Dyadic(0, 0)
ONE = Dyadic(1, 0)


def half_power(k: int) -> Dyadic:
    """2^(-k) for k >= 0."""
    return Dyadic(1, k)


def _coerce(value: "Dyadic | int") -> Dyadic:
    if isinstance(value, Dyadic):
        return value
    if isinstance(value, int):
        return Dyadic(value, 0)
    raise TypeError(f"cannot mix Dyadic with {type(value).__name__}")
