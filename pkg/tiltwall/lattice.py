"""Chern character arithmetic on the cubic threefold: twists, slope, discriminant and the Euler pairing"""

import logging
import warnings
from fractions import Fraction
from typing import TypeVar

from tiltwall.constants import CUBIC_THREEFOLD, CURVE_DEGREES
from tiltwall.enums import LatticeRule
from tiltwall.exactnum import INFINITY, Slope, as_rational
from tiltwall.exceptions import DomainError
from tiltwall.models.characters import Character, ChernCharacter, TruncatedCharacter, Variety, Violation
from tiltwall.type_alias import RationalLike

logger = logging.getLogger(__name__)

CharacterT = TypeVar("CharacterT", ChernCharacter, TruncatedCharacter)


def twist(v: CharacterT, beta: RationalLike) -> CharacterT:
    """
    The twisted character ch^beta = e^(-beta H) * ch.

    :param v: full or truncated character
    :param beta: the twist
    :return: character of the same kind as ``v``
    """
    beta = as_rational(beta)
    ch1 = v.ch1 - beta * v.ch0
    ch2 = v.ch2 - beta * v.ch1 + beta**2 / 2 * v.ch0
    if isinstance(v, TruncatedCharacter):
        return TruncatedCharacter(v.ch0, ch1, ch2)
    ch3 = v.ch3 - beta * v.ch2 + beta**2 / 2 * v.ch1 - beta**3 / 6 * v.ch0
    return ChernCharacter(v.ch0, ch1, ch2, ch3)


def dual(v: ChernCharacter) -> ChernCharacter:
    return ChernCharacter(v.ch0, -v.ch1, v.ch2, -v.ch3)


def truncate(v: Character) -> TruncatedCharacter:
    if isinstance(v, ChernCharacter):
        return v.truncated
    return v


def mu_h(v: Character) -> Slope:
    """slope ch1/ch0, or +infinity in rank zero"""
    if v.ch0 == 0:
        return INFINITY
    return v.ch1 / v.ch0


def delta(v: Character, variety: Variety = CUBIC_THREEFOLD) -> Fraction:
    """
    The H-discriminant (H^2 ch1)^2 - 2 (H^3 ch0)(H ch2).

    Example::

        delta(TruncatedCharacter(4, -1, Fraction(-5, 6)))  # 69
    """
    h3 = variety.h3
    return (h3 * v.ch1) ** 2 - 2 * (h3 * v.ch0) * (h3 * v.ch2)


def delta_bar(v: Character, variety: Variety = CUBIC_THREEFOLD) -> Fraction:
    """the discriminant normalized by (H^3)^2"""
    return delta(v, variety) / variety.h3**2


def multiply(v: ChernCharacter, w: ChernCharacter) -> ChernCharacter:
    """product in the graded ring Q[H]/H^4"""
    a, b = v.components(), w.components()
    graded = [sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)) for k in range(4)]
    return ChernCharacter(int(graded[0]), graded[1], graded[2], graded[3])


def chi1(v: ChernCharacter, variety: Variety = CUBIC_THREEFOLD) -> Fraction:
    """
    Euler characteristic by Hirzebruch-Riemann-Roch; on the cubic threefold
    chi = ch0 + 2 ch1 + 3 ch2 + 3 ch3.

    :param v: a Chern character
    :param variety: numerical data of the threefold
    :return: the Euler characteristic, integral on lattice points
    """
    return variety.h3 * (v.ch3 + variety.todd1 * v.ch2 + variety.todd2 * v.ch1 + variety.todd3 * v.ch0)


def chi2(v: ChernCharacter, w: ChernCharacter, variety: Variety = CUBIC_THREEFOLD) -> Fraction:
    """the Euler pairing chi(v, w) = chi(dual(v) * w)"""
    return chi1(multiply(dual(v), w), variety)


def curve_characters(d: int) -> tuple[ChernCharacter, ChernCharacter]:
    """
    Characters of O_Y(D) for a degree d curve class D on a hyperplane section Y,
    and of the kernel E_D of the evaluation map O_X^d -> O_Y(D).

    :param d: degree of the curve; degrees other than 4, 5, 6 only warn
    :return: (ch(O_Y(D)), ch(E_D))
    :raises DomainError: if d < 3
    """
    if d < 3:
        raise DomainError(f"Curve degree must be at least 3, got {d}.")
    if d not in CURVE_DEGREES:
        studied = f"{min(CURVE_DEGREES)}..{max(CURVE_DEGREES)}"
        warnings.warn(f"Curve degree {d} lies outside the studied range {studied}.", stacklevel=2)
    sheaf = ChernCharacter(0, 1, Fraction(2 * d - 3, 6), Fraction(-1, 6))
    kernel = ChernCharacter(d, 0, 0, 0) - sheaf
    return sheaf, kernel


def validate(v: Character) -> list[Violation]:
    """
    Checks the integrality rules of the numerical lattice: ch1 and 6 ch2 integral with 6 ch2 = ch1 mod 2,
    and 6 ch3 integral. A non-integral Euler characteristic is only logged.

    :param v: full or truncated character
    :return: the violated rules; empty if ``v`` is a lattice point
    """
    violations = []
    if v.ch1.denominator != 1:
        violations.append(Violation(LatticeRule.CH1_INTEGRAL, f"ch1 = {v.ch1} is not integral"))
    six_ch2 = 6 * v.ch2
    if six_ch2.denominator != 1:
        violations.append(Violation(LatticeRule.CH2_INTEGRAL, f"6*ch2 = {six_ch2} is not integral"))
    elif v.ch1.denominator == 1 and (six_ch2 - v.ch1) % 2 != 0:
        violations.append(
            Violation(LatticeRule.PARITY, f"6*ch2 = {six_ch2} is not congruent to ch1 = {v.ch1} (mod 2)")
        )
    if isinstance(v, ChernCharacter):
        six_ch3 = 6 * v.ch3
        if six_ch3.denominator != 1:
            violations.append(Violation(LatticeRule.CH3_INTEGRAL, f"6*ch3 = {six_ch3} is not integral"))
        elif not violations and chi1(v).denominator != 1:
            logger.warning("Euler characteristic of %s is %s, not an integer", v, chi1(v))
    return violations
