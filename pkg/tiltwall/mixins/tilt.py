from fractions import Fraction

from tiltwall.exactnum import QuadraticValue, Slope
from tiltwall.mixins._protocol import MixinProtocol
from tiltwall.mixins._utils import any_character
from tiltwall.models.characters import Character
from tiltwall.models.walls import HalfPlanePoint, LiVerdict, WallLocus
from tiltwall.tilt import (
    beta_pm,
    li_admissible,
    limit_slope,
    numerical_wall,
    region_v_contains,
    tilt_slope,
    zero_slope_locus,
)
from tiltwall.type_alias import RationalLike


class TiltMixin(MixinProtocol):
    def wall(self, v: Character | str, w: Character | str) -> WallLocus:
        """
        Numerical wall between two classes. Only the degree <= 2 parts matter.

        :param v: first class, full or truncated
        :param w: second class
        :return: Circle, VerticalLine, Everywhere or Empty

        Example::

            TiltWall().wall("4,-1,-5/6", "-1,1,-1/2")  # Circle(center=-17/18, radius_sq=1/324)
        """
        return numerical_wall(any_character(v), any_character(w))

    def slope(self, v: Character | str, alpha_sq: RationalLike, beta: RationalLike) -> Slope:
        """tilt slope of ``v`` at (alpha, beta), +infinity when Im Z vanishes"""
        return tilt_slope(any_character(v), HalfPlanePoint(alpha_sq, beta))  # type: ignore[arg-type]

    def limit_slope(self, v: Character | str, beta: RationalLike) -> Slope:
        """
        Tilt slope of ``v`` as alpha tends to zero.

        Example::

            TiltWall().limit_slope("-1,2,-2", -1)  # Fraction(-1, 2)
        """
        return limit_slope(any_character(v), beta)

    def betas(self, v: Character | str) -> tuple[QuadraticValue, QuadraticValue]:
        """beta_-(v) <= beta_+(v), exact"""
        return beta_pm(any_character(v), self.variety)

    def zero_slope_locus(self, v: Character | str) -> tuple[Fraction, Fraction]:
        """
        The hyperbola (beta - mu)^2 - alpha^2 = rhs of vanishing tilt slope.

        Example::

            TiltWall().zero_slope_locus("4,-1,-5/6")  # (Fraction(-1, 4), Fraction(23, 48))
        """
        return zero_slope_locus(any_character(v), self.variety)

    def li(self, v: Character | str) -> LiVerdict:
        """position of ``v`` against Li's boundary curve"""
        return li_admissible(any_character(v))

    def in_region_v(self, alpha: RationalLike, beta: RationalLike) -> bool:
        return region_v_contains(alpha, beta)
