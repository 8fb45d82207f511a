from fractions import Fraction

from tiltwall.lattice import chi1, chi2, curve_characters, delta, twist, validate
from tiltwall.mixins._protocol import MixinProtocol
from tiltwall.mixins._utils import any_character, full_character
from tiltwall.models.characters import Character, ChernCharacter, Violation
from tiltwall.type_alias import RationalLike


class LatticeMixin(MixinProtocol):
    def chi(self, v: ChernCharacter | str, w: ChernCharacter | str | None = None) -> Fraction:
        """
        Euler characteristic of ``v``, or the Euler pairing chi(v, w) when ``w`` is given.

        :param v: full Chern character or its literal ``r,c1,c2,c3``
        :param w: optional second character
        :return: exact value, an integer on lattice points

        Example::

            TiltWall().chi("4,-1,-5/6,1/6", "4,-1,-5/6,1/6")  # Fraction(-7, 1)
        """
        first = full_character(v)
        if w is None:
            return chi1(first, self.variety)
        return chi2(first, full_character(w), self.variety)

    def discriminant(self, v: Character | str) -> Fraction:
        """
        The H-discriminant of a full or truncated character.

        Example::

            TiltWall().discriminant("4,-1,-5/6")  # Fraction(69, 1)
        """
        return delta(any_character(v), self.variety)

    def twist(self, v: Character | str, beta: RationalLike) -> Character:
        """the twisted character ch^beta"""
        return twist(any_character(v), beta)

    def validate(self, v: Character | str) -> list[Violation]:
        """integrality violations of ``v``; empty for lattice points"""
        return validate(any_character(v))

    def curve_characters(self, d: int) -> tuple[ChernCharacter, ChernCharacter]:
        """
        Characters of O_Y(D) and of the kernel E_D for a degree ``d`` curve on a hyperplane section.

        :param d: the degree, at least 3
        :return: (ch(O_Y(D)), ch(E_D))
        """
        return curve_characters(d)
