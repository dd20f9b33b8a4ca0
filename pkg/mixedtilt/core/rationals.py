"""
Exact value types shared by every stability computation

Slope values live in Q extended by +infinity, charge values are complex
numbers with rational real and imaginary parts. No floating point is used.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Optional, Union

from .constants import PLUS_INFINITY_TOKEN
from .exceptions import ParseError

RationalLike = Union[int, Fraction, str]

_INTEGER_OR_FRACTION = re.compile(r'^[+-]?\d+(?:/\d+)?$')
_FINITE_DECIMAL = re.compile(r'^[+-]?\d*\.\d+$')


def parse_rational(token: str) -> Fraction:
    """
    Parse an exact rational from ``p``, ``p/q`` or a finite decimal

    Accepts the Unicode minus sign. Decimals are converted exactly.

    Raises:
        ParseError: if the token is malformed or the denominator is zero
    """
    if not isinstance(token, str):
        raise ParseError(repr(token), "expected a string")
    text = token.strip().replace('−', '-')
    if _INTEGER_OR_FRACTION.match(text):
        if '/' in text:
            numerator, denominator = text.split('/')
            if int(denominator) == 0:
                raise ParseError(token, "zero denominator")
            return Fraction(int(numerator), int(denominator))
        return Fraction(int(text))
    if _FINITE_DECIMAL.match(text):
        return Fraction(text)
    raise ParseError(token)


def format_rational(value: RationalLike) -> str:
    """Canonical reduced form ``p`` or ``p/q``"""
    return str(Fraction(value))


@total_ordering
@dataclass(frozen=True)
class Slope:
    """
    A slope value: a finite rational, or +infinity when ``value`` is None.

    +infinity is strictly greater than every finite slope and equal to itself.
    """
    value: Optional[Fraction] = None

    @classmethod
    def finite(cls, value: RationalLike) -> 'Slope':
        return cls(Fraction(value))

    @classmethod
    def plus_infinity(cls) -> 'Slope':
        return cls(None)

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __lt__(self, other):
        if not isinstance(other, Slope):
            return NotImplemented
        if self.value is None:
            return False
        if other.value is None:
            return True
        return self.value < other.value

    def to_json(self) -> str:
        if self.value is None:
            return PLUS_INFINITY_TOKEN
        return format_rational(self.value)

    def __str__(self):
        return self.to_json()


PLUS_INFINITY = Slope.plus_infinity()


@dataclass(frozen=True)
class ChargeValue:
    """Exact complex number re + i*im"""
    re: Fraction
    im: Fraction

    def __post_init__(self):
        object.__setattr__(self, 're', Fraction(self.re))
        object.__setattr__(self, 'im', Fraction(self.im))

    def __add__(self, other: 'ChargeValue') -> 'ChargeValue':
        return ChargeValue(self.re + other.re, self.im + other.im)

    def __sub__(self, other: 'ChargeValue') -> 'ChargeValue':
        return ChargeValue(self.re - other.re, self.im - other.im)

    def __neg__(self) -> 'ChargeValue':
        return ChargeValue(-self.re, -self.im)

    def scale(self, k: RationalLike) -> 'ChargeValue':
        k = Fraction(k)
        return ChargeValue(k * self.re, k * self.im)

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def slope(self) -> Slope:
        """-re/im, or +infinity on the real axis"""
        if self.im == 0:
            return PLUS_INFINITY
        return Slope(-self.re / self.im)

    def alignment(self, other: 'ChargeValue') -> Fraction:
        """
        Cross product re(self)*im(other) - re(other)*im(self).

        Zero exactly when the two charges are real-proportional, which is
        how equal slopes are detected without dividing.
        """
        return self.re * other.im - other.re * self.im

    def to_json(self) -> dict:
        return {"re": format_rational(self.re), "im": format_rational(self.im)}

    def __str__(self):
        return f"{format_rational(self.re)} + {format_rational(self.im)}i"


ZERO_CHARGE = ChargeValue(Fraction(0), Fraction(0))
