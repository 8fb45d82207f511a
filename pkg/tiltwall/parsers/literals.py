"""parsers for the comma-separated literals used on the command line and in fixtures"""

from fractions import Fraction

from tiltwall.exactnum import parse_rational
from tiltwall.exceptions import TiltWallUserError


def split_literal(text: str, count: int) -> list[str]:
    parts = [part.strip() for part in text.split(",")]
    if len(parts) != count or not all(parts):
        raise TiltWallUserError(f"Invalid literal '{text}'. Expected {count} comma-separated components.")
    return parts


def parse_components(text: str, count: int) -> list[Fraction]:
    """
    Parses a character literal such as ``4,-1,-5/6,1/6``.

    :param text: the literal
    :param count: number of components (4 for full characters, 3 for truncated ones)
    :return: the components as rationals
    """
    return [parse_rational(part) for part in split_literal(text, count)]


def parse_integers(text: str, count: int) -> list[int]:
    """parses an integer literal such as ``2,1``"""
    values = parse_components(text, count)
    if any(value.denominator != 1 for value in values):
        raise TiltWallUserError(f"Invalid literal '{text}'. Expected integers.")
    return [int(value) for value in values]
