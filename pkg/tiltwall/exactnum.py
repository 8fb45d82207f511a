"""exact rationals and quadratic irrationals p + q*sqrt(d)

Every predicate in tiltwall routes through this module; no decision is ever taken on a float.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from math import floor, isqrt
from typing import Any

from sympy.ntheory.factor_ import core

from tiltwall.enums import Ordering
from tiltwall.exceptions import NegativeRadicand, TiltWallError, TiltWallUserError
from tiltwall.type_alias import RationalLike

RATIONAL_PATTERN = re.compile(r"^-?\d+(/\d+)?$")
QUADRATIC_PATTERN = re.compile(r"^(?P<p>-?\d+(/\d+)?)( \+ (?P<q>-?\d+(/\d+)?)\*sqrt\((?P<d>\d+(/\d+)?)\))?$")

# scale used to seed floor() before the exact correction steps
_FLOOR_SEED_BITS = 64


def parse_rational(text: str) -> Fraction:
    """
    Parses the ASCII literal ``a`` or ``a/b`` (no whitespace).

    :param text: the literal
    :return: the rational in lowest terms
    :raises TiltWallUserError: if the literal is malformed or the denominator is zero
    """
    if not RATIONAL_PATTERN.match(text):
        raise TiltWallUserError(f"Invalid rational literal '{text}'. Expected 'a' or 'a/b'.")
    numerator, _, denominator = text.partition("/")
    if denominator and int(denominator) == 0:
        raise TiltWallUserError(f"Invalid rational literal '{text}': zero denominator.")
    return Fraction(int(numerator), int(denominator or 1))


def format_rational(value: Fraction | int) -> str:
    return str(Fraction(value))


def as_rational(value: RationalLike) -> Fraction:
    """coerces ints, Fractions and rational literals"""
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, bool) or not isinstance(value, int | Fraction):
        raise TiltWallUserError(f"Expected an exact rational, got {type(value).__name__}.")
    return Fraction(value)


def sign(value: Fraction | int) -> int:
    return (value > 0) - (value < 0)


class Infinity:
    """+infinity sentinel for slopes of classes with vanishing denominator"""

    _instance: "Infinity | None" = None

    def __new__(cls) -> "Infinity":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "+inf"

    def __eq__(self, other: object) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("+inf")

    def __lt__(self, other: Any) -> bool:
        return False

    def __le__(self, other: Any) -> bool:
        return other is self

    def __gt__(self, other: Any) -> bool:
        return other is not self

    def __ge__(self, other: Any) -> bool:
        return True


INFINITY = Infinity()

Slope = Fraction | Infinity


def compare_slopes(x: Slope, y: Slope) -> Ordering:
    if isinstance(x, Infinity) or isinstance(y, Infinity):
        return Ordering.of(int(isinstance(x, Infinity)) - int(isinstance(y, Infinity)))
    return Ordering.of(sign(x - y))


@dataclass(frozen=True)
class QuadraticValue:
    """The real number p + q*sqrt(d), kept in canonical form.

    Canonical form: either q = 0 and d = 0, or d is a squarefree integer > 1.
    Build instances with :py:func:`qv_from`; the constructor does not canonicalize.

    :param p: rational part
    :param q: coefficient of the square root
    :param d: radicand
    """

    p: Fraction
    q: Fraction = Fraction(0)
    d: Fraction = Fraction(0)

    @classmethod
    def rational(cls, value: Fraction | int) -> "QuadraticValue":
        return cls(Fraction(value))

    @classmethod
    def parse(cls, text: str) -> "QuadraticValue":
        """parses the printed form ``p + q*sqrt(d)`` (or a bare rational)"""
        match = QUADRATIC_PATTERN.match(text)
        if not match:
            raise TiltWallUserError(f"Invalid quadratic literal '{text}'. Expected 'p + q*sqrt(d)'.")
        if match["q"] is None:
            return cls.rational(parse_rational(match["p"]))
        return qv_from(parse_rational(match["p"]), parse_rational(match["q"]), parse_rational(match["d"]))

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def __str__(self) -> str:
        if self.is_rational:
            return format_rational(self.p)
        return f"{format_rational(self.p)} + {format_rational(self.q)}*sqrt({format_rational(self.d)})"

    def _coerce(self, other: "QuadraticValue | Fraction | int") -> "QuadraticValue":
        if isinstance(other, QuadraticValue):
            return other
        return QuadraticValue.rational(other)

    def _common_radicand(self, other: "QuadraticValue") -> Fraction:
        if self.is_rational:
            return other.d
        if other.is_rational or other.d == self.d:
            return self.d
        raise TiltWallError(f"Cannot combine sqrt({self.d}) and sqrt({other.d}) exactly in one value.")

    def __neg__(self) -> "QuadraticValue":
        return QuadraticValue(-self.p, -self.q, self.d)

    def __add__(self, other: "QuadraticValue | Fraction | int") -> "QuadraticValue":
        other = self._coerce(other)
        d = self._common_radicand(other)
        return qv_from(self.p + other.p, self.q + other.q, d)

    __radd__ = __add__

    def __sub__(self, other: "QuadraticValue | Fraction | int") -> "QuadraticValue":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Fraction | int) -> "QuadraticValue":
        return (-self) + other

    def __mul__(self, other: "QuadraticValue | Fraction | int") -> "QuadraticValue":
        other = self._coerce(other)
        d = self._common_radicand(other)
        return qv_from(self.p * other.p + self.q * other.q * d, self.p * other.q + self.q * other.p, d)

    __rmul__ = __mul__

    def __lt__(self, other: "QuadraticValue | Fraction | int") -> bool:
        return qv_cmp(self, self._coerce(other)) is Ordering.LESS

    def __le__(self, other: "QuadraticValue | Fraction | int") -> bool:
        return qv_cmp(self, self._coerce(other)) is not Ordering.GREATER

    def __gt__(self, other: "QuadraticValue | Fraction | int") -> bool:
        return qv_cmp(self, self._coerce(other)) is Ordering.GREATER

    def __ge__(self, other: "QuadraticValue | Fraction | int") -> bool:
        return qv_cmp(self, self._coerce(other)) is not Ordering.LESS

    def __floor__(self) -> int:
        return qv_floor(self)

    def __ceil__(self) -> int:
        return qv_ceil(self)


def qv_from(p: RationalLike, q: RationalLike, d: RationalLike) -> QuadraticValue:
    """
    Builds the canonical form of p + q*sqrt(d).

    Perfect squares are folded into p; any other radicand is reduced to its squarefree integer part.

    :param p: rational part
    :param q: coefficient of the root
    :param d: radicand, must be non-negative
    :return: canonical QuadraticValue
    :raises NegativeRadicand: if d < 0
    """
    p, q, d = as_rational(p), as_rational(q), as_rational(d)
    if d < 0:
        raise NegativeRadicand(f"sqrt({d}) is not real.")
    if q == 0 or d == 0:
        return QuadraticValue(p)
    # sqrt(n/m) = sqrt(n*m)/m = s*sqrt(f)/m with f squarefree
    radicand = d.numerator * d.denominator
    squarefree = int(core(radicand, 2))
    root = isqrt(radicand // squarefree)
    coefficient = q * Fraction(root, d.denominator)
    if squarefree == 1:
        return QuadraticValue(p + coefficient)
    return QuadraticValue(p, coefficient, Fraction(squarefree))


def qv_sign(x: QuadraticValue) -> int:
    """exact sign of p + q*sqrt(d)"""
    sp, sq = sign(x.p), sign(x.q)
    if sq == 0:
        return sp
    if sp == 0 or sp == sq:
        return sq
    # opposite signs: the larger of p^2 and q^2*d wins
    return sp * sign(x.p * x.p - x.q * x.q * x.d)


def _sign_of_three_terms(a: Fraction, b: Fraction, m: Fraction, c: Fraction, n: Fraction) -> int:
    """sign of a + b*sqrt(m) + c*sqrt(n) by sign-tracked squaring"""
    first = qv_sign(QuadraticValue(a, b, m))
    second = sign(c)
    if second == 0 or first == second:
        return first
    if first == 0:
        return second
    # |a + b*sqrt(m)| vs |c|*sqrt(n): compare the squares
    squares = qv_sign(QuadraticValue(a * a + b * b * m - c * c * n, 2 * a * b, m))
    if squares == 0:
        return 0
    return first if squares > 0 else second


def qv_cmp(x: QuadraticValue, y: QuadraticValue) -> Ordering:
    """
    Total-order comparison of two quadratic irrationals.

    Values with a shared radicand (or a rational side) are compared through the sign of their difference;
    distinct radicands go through one round of squaring with sign tracking.
    """
    if x.is_rational or y.is_rational or x.d == y.d:
        return Ordering.of(qv_sign(x - y))
    return Ordering.of(_sign_of_three_terms(x.p - y.p, x.q, x.d, -y.q, y.d))


def qv_floor(x: QuadraticValue) -> int:
    if x.is_rational:
        return floor(x.p)
    scale = 1 << _FLOOR_SEED_BITS
    approx_root = Fraction(isqrt(int(x.d) * scale * scale), scale)
    guess = floor(x.p + x.q * approx_root)
    while qv_cmp(QuadraticValue.rational(guess), x) is Ordering.GREATER:
        guess -= 1
    while qv_cmp(QuadraticValue.rational(guess + 1), x) is not Ordering.GREATER:
        guess += 1
    return guess


def qv_ceil(x: QuadraticValue) -> int:
    return -qv_floor(-x)


__all__ = [
    "INFINITY",
    "Infinity",
    "QuadraticValue",
    "Slope",
    "as_rational",
    "compare_slopes",
    "format_rational",
    "parse_rational",
    "qv_ceil",
    "qv_cmp",
    "qv_floor",
    "qv_from",
    "qv_sign",
    "sign",
]
