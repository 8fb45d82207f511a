"""Tilt-stability numerics: central charge, slopes, numerical walls, beta_-/beta_+, Li's bound, region V"""

from fractions import Fraction
from math import floor

from tiltwall.constants import CUBIC_THREEFOLD, LI_BOUNDARY_RANKS
from tiltwall.enums import Crossing, Ordering
from tiltwall.exactnum import INFINITY, QuadraticValue, Slope, as_rational, compare_slopes, qv_from, sign
from tiltwall.exceptions import NonPositiveAlpha, RankZero
from tiltwall.lattice import delta, mu_h, truncate, twist
from tiltwall.models.characters import Character, TruncatedCharacter, Variety
from tiltwall.models.walls import (
    Boundary,
    Circle,
    Empty,
    Everywhere,
    HalfPlanePoint,
    Inside,
    LiVerdict,
    Outside,
    VerticalLine,
    WallLocus,
)
from tiltwall.type_alias import RationalLike


def central_charge(
    v: Character, pt: HalfPlanePoint, variety: Variety = CUBIC_THREEFOLD
) -> tuple[Fraction, Fraction]:
    """
    Z = alpha^2/2 H^3 ch0^beta - H ch2^beta + i H^2 ch1^beta with the H-powers folded in.

    :param v: character; only the degree <= 2 part is used
    :param pt: point of the upper half plane
    :return: (Re Z, Im Z)
    """
    twisted = twist(truncate(v), pt.beta)
    h3 = variety.h3
    real = pt.alpha_sq / 2 * h3 * twisted.ch0 - h3 * twisted.ch2
    return real, h3 * twisted.ch1


def tilt_slope(v: Character, pt: HalfPlanePoint) -> Slope:
    """-Re Z / Im Z, +infinity where Im Z = 0"""
    real, imaginary = central_charge(v, pt)
    if imaginary == 0:
        return INFINITY
    return -real / imaginary


def slope_cmp(v: Character, w: Character, pt: HalfPlanePoint) -> Ordering:
    """compares tilt slopes by cross-multiplication"""
    real_v, imag_v = central_charge(v, pt)
    real_w, imag_w = central_charge(w, pt)
    if imag_v == 0 or imag_w == 0:
        return compare_slopes(tilt_slope(v, pt), tilt_slope(w, pt))
    # -re_v/im_v vs -re_w/im_w, with the sign of im_v * im_w restored
    return Ordering.of(sign(real_w * imag_v - real_v * imag_w) * sign(imag_v * imag_w))


def limit_slope(v: Character, beta: RationalLike) -> Slope:
    """the tilt slope as alpha tends to zero: ch2^beta / ch1^beta"""
    twisted = twist(truncate(v), as_rational(beta))
    if twisted.ch1 == 0:
        return INFINITY
    return twisted.ch2 / twisted.ch1


def numerical_wall(v: Character, w: Character) -> WallLocus:
    """
    Solves mu_{alpha,beta}(v) = mu_{alpha,beta}(w).

    The equation reads -x/2 (beta^2 + alpha^2) + y beta + z = 0 with x = r_v c_w - r_w c_v,
    y = r_v d_w - r_w d_v and z = d_v c_w - d_w c_v, where (r, c, d) = (ch0, ch1, ch2).

    :param v: first class
    :param w: second class
    :return: the wall; circles with radius_sq <= 0 are returned as Empty with their data
    """
    v, w = truncate(v), truncate(w)
    x = v.ch0 * w.ch1 - w.ch0 * v.ch1
    y = v.ch0 * w.ch2 - w.ch0 * v.ch2
    z = v.ch2 * w.ch1 - w.ch2 * v.ch1
    if x == 0:
        if y != 0:
            return VerticalLine(-z / y)
        return Everywhere() if z == 0 else Empty()
    center = y / x
    radius_sq = center**2 + 2 * z / x
    if radius_sq <= 0:
        return Empty(center, radius_sq)
    return Circle(center, radius_sq)


def translate_wall(wall: WallLocus, shift: RationalLike) -> WallLocus:
    """moves a wall by ``shift`` along the beta axis"""
    shift = as_rational(shift)
    match wall:
        case Circle(center=center, radius_sq=radius_sq):
            return Circle(center + shift, radius_sq)
        case VerticalLine(beta=beta):
            return VerticalLine(beta + shift)
        case Empty(center=center, radius_sq=radius_sq) if center is not None:
            return Empty(center + shift, radius_sq)
    return wall


def _require_rank(v: TruncatedCharacter) -> None:
    if v.ch0 == 0:
        raise RankZero(f"{v} has rank zero.")


def zero_slope_locus(v: Character, variety: Variety = CUBIC_THREEFOLD) -> tuple[Fraction, Fraction]:
    """
    The hyperbola (beta - mu)^2 - alpha^2 = rhs on which the tilt slope of ``v`` vanishes.

    :return: (mu_H(v), Delta_H(v) / (H^3 ch0)^2)
    :raises RankZero: for rank zero classes
    """
    v = truncate(v)
    _require_rank(v)
    return v.ch1 / v.ch0, delta(v, variety) / (variety.h3 * v.ch0) ** 2


def beta_pm(v: Character, variety: Variety = CUBIC_THREEFOLD) -> tuple[QuadraticValue, QuadraticValue]:
    """
    The roots beta_- <= beta_+ of the zero tilt slope equation at alpha = 0.

    :raises RankZero: for rank zero classes
    :raises NegativeRadicand: for classes of negative discriminant
    """
    mu, rhs = zero_slope_locus(v, variety)
    return qv_from(mu, -1, rhs), qv_from(mu, 1, rhs)


def li_admissible(v: Character) -> LiVerdict:
    """
    Position of (x, y) = (ch1/ch0, ch2/ch0) against the curve y = n x - n^2/2, n the integer nearest to x.
    Tilt-stable classes lie below the curve, or on it when |ch0| is 1 or 2.

    :raises RankZero: for rank zero classes
    """
    v = truncate(v)
    _require_rank(v)
    x, y = v.ch1 / v.ch0, v.ch2 / v.ch0
    n = floor(x + Fraction(1, 2))
    boundary = n * x - Fraction(n * n, 2)
    if y < boundary:
        return Outside()
    if y == boundary:
        return Boundary(rank_ok=abs(v.ch0) in LI_BOUNDARY_RANKS)
    return Inside()


def region_v_contains(alpha: RationalLike, beta: RationalLike) -> bool:
    """
    Membership in V = {-1/2 <= beta, alpha < -beta} u {-1 < beta < -1/2, alpha <= 1 + beta}.

    :raises NonPositiveAlpha: if alpha <= 0
    """
    alpha, beta = as_rational(alpha), as_rational(beta)
    if alpha <= 0:
        raise NonPositiveAlpha(f"alpha must be positive, got {alpha}.")
    half = Fraction(-1, 2)
    if beta >= half:
        return alpha < -beta
    return -1 < beta and alpha <= 1 + beta


def alpha_sq_on_line(wall: Circle, beta0: Fraction) -> Fraction:
    """radius_sq - (beta0 - center)^2, which may be zero or negative"""
    return wall.radius_sq - (beta0 - wall.center) ** 2


def wall_alpha_sq_at(wall: WallLocus, beta0: RationalLike) -> Fraction | Crossing | None:
    """
    Where a wall crosses the vertical line beta = beta0.

    :param wall: the wall
    :param beta0: the line
    :return: alpha^2 > 0 of the crossing, :py:attr:`Crossing.ON_LINE` when the wall contains the whole line,
        None when there is no crossing with alpha > 0
    """
    beta0 = as_rational(beta0)
    match wall:
        case Circle():
            alpha_sq = alpha_sq_on_line(wall, beta0)
            return alpha_sq if alpha_sq > 0 else None
        case VerticalLine(beta=beta):
            return Crossing.ON_LINE if beta == beta0 else None
        case Everywhere():
            return Crossing.ON_LINE
    return None


def wall_contains(wall: WallLocus, pt: HalfPlanePoint) -> bool:
    match wall:
        case Circle(center=center, radius_sq=radius_sq):
            return (pt.beta - center) ** 2 + pt.alpha_sq == radius_sq
        case VerticalLine(beta=beta):
            return pt.beta == beta
        case Everywhere():
            return True
    return False


def is_left_of_vertical_wall(wall: WallLocus, v: Character) -> bool:
    mu = mu_h(v)
    return isinstance(wall, Circle) and mu is not INFINITY and wall.center < mu
