"""Exact arithmetic for the max-plus semifield.

Scalars are either -inf (the additive identity) or an exact rational.
Addition is max, multiplication is ordinary +, division is ordinary -.
No floating point anywhere: tie detection downstream depends on exact
equality of term values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Union

from .errors import DivisionByTropicalZero

ScalarLike = Union["TropicalScalar", Fraction, int, str, None]


@total_ordering
@dataclass(frozen=True)
class TropicalScalar:
    """A member of the max-plus semifield: -inf or an exact rational.

    ``value is None`` encodes -inf; the absorption laws are enforced in
    the operations, never by sentinel arithmetic.
    """

    value: Fraction | None

    @staticmethod
    def of(x: ScalarLike) -> "TropicalScalar":
        """Coerce an int, Fraction, text form, or None (-inf) to a scalar."""
        if isinstance(x, TropicalScalar):
            return x
        if x is None:
            return NEG_INF
        if isinstance(x, str):
            return parse_scalar(x)
        if isinstance(x, float):
            raise TypeError("floats are not allowed; use int, Fraction, or 'p/q' text")
        return TropicalScalar(Fraction(x))

    @property
    def is_neg_inf(self) -> bool:
        return self.value is None

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def __lt__(self, other: "TropicalScalar") -> bool:
        if not isinstance(other, TropicalScalar):
            return NotImplemented
        if self.value is None:
            return other.value is not None
        if other.value is None:
            return False
        return self.value < other.value

    def __add__(self, other: "TropicalScalar") -> "TropicalScalar":
        if not isinstance(other, TropicalScalar):
            return NotImplemented
        return trop_add(self, other)

    def __mul__(self, other: "TropicalScalar") -> "TropicalScalar":
        if not isinstance(other, TropicalScalar):
            return NotImplemented
        return trop_mul(self, other)

    def __truediv__(self, other: "TropicalScalar") -> "TropicalScalar":
        if not isinstance(other, TropicalScalar):
            return NotImplemented
        return trop_div(self, other)

    def __pow__(self, k: int) -> "TropicalScalar":
        if not isinstance(k, int):
            return NotImplemented
        return trop_pow(self, k)

    def __str__(self) -> str:
        if self.value is None:
            return "-inf"
        return str(self.value)

    def __repr__(self) -> str:
        return f"TropicalScalar({self})"


NEG_INF = TropicalScalar(None)  # tropical zero
ONE = TropicalScalar(Fraction(0))  # tropical one


def parse_scalar(text: str) -> TropicalScalar:
    """Parse the text form: ``-inf``, an integer, ``p/q``, or a decimal."""
    token = text.strip()
    if token == "-inf":
        return NEG_INF
    return TropicalScalar(Fraction(token))


def trop_add(x: TropicalScalar, y: TropicalScalar) -> TropicalScalar:
    """Tropical sum: max, with -inf as the bottom element."""
    if x.value is None:
        return y
    if y.value is None:
        return x
    return x if x.value >= y.value else y


def trop_mul(x: TropicalScalar, y: TropicalScalar) -> TropicalScalar:
    """Tropical product: ordinary addition; -inf absorbs."""
    if x.value is None or y.value is None:
        return NEG_INF
    return TropicalScalar(x.value + y.value)


def trop_div(x: TropicalScalar, y: TropicalScalar) -> TropicalScalar:
    """Tropical quotient: ordinary subtraction; the divisor must be finite."""
    if y.value is None:
        raise DivisionByTropicalZero("cannot divide by -inf")
    if x.value is None:
        return NEG_INF
    return TropicalScalar(x.value - y.value)


def trop_pow(x: TropicalScalar, k: int) -> TropicalScalar:
    """Iterated tropical product: k-fold self-sum; x^0 is the tropical one."""
    if k < 0:
        raise ValueError(f"exponent must be >= 0, got {k}")
    if k == 0:
        return ONE
    if x.value is None:
        return NEG_INF
    return TropicalScalar(x.value * k)


def trop_sum(values) -> TropicalScalar:
    """Tropical sum (max) of an iterable; -inf on empty input."""
    best = NEG_INF
    for v in values:
        if best.value is None or (v.value is not None and v.value > best.value):
            best = v
    return best
