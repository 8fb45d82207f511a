from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Any, TypeVar

from tiltwall.enums import LatticeRule
from tiltwall.exactnum import as_rational, format_rational
from tiltwall.exceptions import TiltWallUserError
from tiltwall.parsers.literals import parse_components

CharacterT = TypeVar("CharacterT", "ChernCharacter", "TruncatedCharacter")


def _integer(value: Any, name: str) -> int:
    rational = as_rational(value)
    if rational.denominator != 1:
        raise TiltWallUserError(f"{name} must be an integer, got {rational}.")
    return int(rational)


class _CharacterArithmetic:
    """componentwise arithmetic shared by the full and truncated characters"""

    def components(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(getattr(self, field.name)) for field in fields(self))  # type: ignore[arg-type]

    def _build(self: CharacterT, values: tuple[Fraction, ...]) -> CharacterT:
        return type(self)(*values)  # type: ignore[arg-type]

    def __add__(self: CharacterT, other: CharacterT) -> CharacterT:
        if type(other) is not type(self):
            return NotImplemented
        return self._build(tuple(x + y for x, y in zip(self.components(), other.components())))

    def __sub__(self: CharacterT, other: CharacterT) -> CharacterT:
        if type(other) is not type(self):
            return NotImplemented
        return self._build(tuple(x - y for x, y in zip(self.components(), other.components())))

    def __neg__(self: CharacterT) -> CharacterT:
        return self._build(tuple(-x for x in self.components()))

    def scale(self: CharacterT, factor: int) -> CharacterT:
        """integer multiple; rational multiples would leave the lattice"""
        return self._build(tuple(factor * x for x in self.components()))

    def __str__(self) -> str:
        return ",".join(format_rational(x) for x in self.components())

    def to_json(self) -> str:
        return str(self)


@dataclass(frozen=True, order=True)
class TruncatedCharacter(_CharacterArithmetic):
    """The degree <= 2 part (ch0, ch1, ch2) of a Chern character, the data tilt walls depend on.

    :param ch0: rank
    :param ch1: coefficient of H
    :param ch2: coefficient of H^2
    """

    ch0: int
    ch1: Fraction
    ch2: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "ch0", _integer(self.ch0, "ch0"))
        object.__setattr__(self, "ch1", as_rational(self.ch1))
        object.__setattr__(self, "ch2", as_rational(self.ch2))

    @classmethod
    def parse(cls, text: str) -> "TruncatedCharacter":
        """parses the literal ``r,c1,c2``"""
        return cls(*parse_components(text, 3))

    from_json = parse


@dataclass(frozen=True, order=True)
class ChernCharacter(_CharacterArithmetic):
    """A Chern character (ch0, ch1, ch2, ch3) on the cubic threefold, each ch_i the coefficient of H^i.

    Construction does not enforce integrality; use :py:func:`tiltwall.lattice.validate`.

    :param ch0: rank
    :param ch1: coefficient of H
    :param ch2: coefficient of H^2
    :param ch3: coefficient of H^3
    """

    ch0: int
    ch1: Fraction
    ch2: Fraction
    ch3: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "ch0", _integer(self.ch0, "ch0"))
        object.__setattr__(self, "ch1", as_rational(self.ch1))
        object.__setattr__(self, "ch2", as_rational(self.ch2))
        object.__setattr__(self, "ch3", as_rational(self.ch3))

    @classmethod
    def parse(cls, text: str) -> "ChernCharacter":
        """parses the literal ``r,c1,c2,c3``"""
        return cls(*parse_components(text, 4))

    from_json = parse

    @property
    def truncated(self) -> TruncatedCharacter:
        return TruncatedCharacter(self.ch0, self.ch1, self.ch2)


Character = ChernCharacter | TruncatedCharacter


@dataclass(frozen=True)
class Variety:
    """Numerical data of a polarized threefold (X, H).

    :param h3: the degree H^3
    :param todd1: coefficient of H in the Todd class
    :param todd2: coefficient of H^2 in the Todd class
    :param todd3: coefficient of H^3 in the Todd class
    """

    h3: int
    todd1: Fraction
    todd2: Fraction
    todd3: Fraction


@dataclass(frozen=True)
class Violation:
    """a failed integrality rule of :py:func:`tiltwall.lattice.validate`"""

    rule: LatticeRule
    message: str

    def __str__(self) -> str:
        return f"{self.rule.value}: {self.message}"
