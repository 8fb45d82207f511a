from fractions import Fraction

import pytest
import sympy

from tests.conftest import random_truncated, to_sympy
from tiltwall import QuadraticValue, TruncatedCharacter
from tiltwall.enums import Crossing, LiKind, Ordering
from tiltwall.exactnum import INFINITY
from tiltwall.exceptions import NonPositiveAlpha, RankZero
from tiltwall.lattice import delta, twist
from tiltwall.models.walls import Boundary, Circle, Empty, Everywhere, HalfPlanePoint, VerticalLine
from tiltwall.tilt import (
    beta_pm,
    central_charge,
    numerical_wall,
    slope_cmp,
    translate_wall,
    wall_alpha_sq_at,
    wall_contains,
    zero_slope_locus,
)

QUOTED_WALLS = [
    ("4,-1,-5/6", "-1,1,-1/2", Circle(Fraction(-17, 18), Fraction(1, 324))),
    ("4,-1,-5/6", "3,-1,-1/6", Circle(Fraction(-11, 6), Fraction(73, 36))),
    ("0,1,5/6", "-1,0,1/3", Circle(Fraction(5, 6), Fraction(1, 36))),
    ("0,1,1/6", "-1,0,0", Circle(Fraction(1, 6), Fraction(1, 36))),
    ("0,1,1/6", "1,2,2", Circle(Fraction(1, 6), Fraction(121, 36))),
    ("0,1,5/6", "-1,2,-2", Circle(Fraction(5, 6), Fraction(289, 36))),
    ("-1,1,5/6", "-3,0,0", Circle(Fraction(5, 6), Fraction(25, 36))),
    ("5,-2,-1/3", "-5,12,-41/3", Circle(Fraction(-7, 5), Fraction(53, 75))),
]


class TestTilt:
    @pytest.mark.parametrize(("v", "w", "expected"), QUOTED_WALLS)
    def test_wall(self, calculator, v, w, expected):
        assert calculator.wall(v, w) == expected

    def test_wall_degenerate_cases(self, calculator, nu):
        assert calculator.wall(nu, nu) == Everywhere()
        assert calculator.wall("4,-1,-5/6", "8,-2,-5/3") == Everywhere()
        assert calculator.wall("4,-1,-5/6", "0,0,1") == VerticalLine(Fraction(-1, 4))
        # equal mu_H: the wall is the vertical line beta = mu_H
        assert calculator.wall("1,0,0", "1,0,1/3") == VerticalLine(0)
        assert calculator.wall("1,0,-1/3", "0,1,0") == Empty(Fraction(0), Fraction(-2, 3))

    def test_wall_contains_its_points(self, calculator):
        wall = calculator.wall("4,-1,-5/6", "-1,1,-1/2")
        point = HalfPlanePoint(wall.radius_sq, wall.center)
        assert wall_contains(wall, point)
        v, w = TruncatedCharacter.parse("4,-1,-5/6"), TruncatedCharacter.parse("-1,1,-1/2")
        assert slope_cmp(v, w, point) is Ordering.EQUAL
        inside = HalfPlanePoint(wall.radius_sq / 2, wall.center)
        assert not wall_contains(wall, inside)

    def test_central_charge(self):
        assert central_charge(TruncatedCharacter(1, 0, 0), HalfPlanePoint(1, 0)) == (Fraction(3, 2), 0)
        nu = TruncatedCharacter.parse("4,-1,-5/6")
        assert central_charge(nu, HalfPlanePoint(1, Fraction(-1, 4)))[1] == 0
        assert central_charge(TruncatedCharacter.parse("0,1,5/6"), HalfPlanePoint(7, 3))[1] == 3

    def test_slope(self, calculator, nu):
        assert calculator.slope(nu, 1, Fraction(-1, 4)) is INFINITY
        assert calculator.slope(nu, 1, -1) == Fraction(-11, 18)
        assert slope_cmp(nu.truncated, nu.truncated, HalfPlanePoint(2, 5)) is Ordering.EQUAL

    @pytest.mark.parametrize(
        ("v", "expected"),
        [("4,-1,-5/6", Fraction(1, 18)), ("-1,2,-2", Fraction(-1, 2)), ("5,-2,-2/3", Fraction(-1, 18))],
    )
    def test_limit_slope(self, calculator, v, expected):
        assert calculator.limit_slope(v, -1) == expected

    def test_limit_slope_on_vertical_wall(self, calculator):
        assert calculator.limit_slope("4,-1,-5/6", Fraction(-1, 4)) is INFINITY

    def test_betas(self, calculator):
        assert calculator.betas("1,0,0") == (QuadraticValue.rational(0), QuadraticValue.rational(0))
        minus, plus = calculator.betas("4,-1,-5/6")
        assert minus == QuadraticValue(Fraction(-1, 4), Fraction(-1, 12), Fraction(69))
        assert plus == QuadraticValue(Fraction(-1, 4), Fraction(1, 12), Fraction(69))
        beta_minus = QuadraticValue(Fraction(-2, 5), Fraction(-1, 15), Fraction(66))
        assert calculator.betas("5,-2,-1/3")[0] == beta_minus
        with pytest.raises(RankZero):
            calculator.betas("0,1,5/6")

    def test_zero_slope_locus(self, calculator):
        assert calculator.zero_slope_locus("4,-1,-5/6") == (Fraction(-1, 4), Fraction(23, 48))
        assert calculator.zero_slope_locus("1,0,0") == (0, 0)
        assert calculator.zero_slope_locus("5,-2,-1/3") == (Fraction(-2, 5), Fraction(66, 225))

    @pytest.mark.parametrize(
        ("v", "kind", "admissible"),
        [
            ("3,-2,2/3", LiKind.INSIDE, False),
            ("-3,1,-1/6", LiKind.INSIDE, False),
            ("2,-1,1/2", LiKind.INSIDE, False),
            ("4,-1,-5/6", LiKind.OUTSIDE, True),
            ("1,0,0", LiKind.BOUNDARY, True),
            ("-2,2,-1", LiKind.BOUNDARY, True),
            ("3,0,0", LiKind.BOUNDARY, False),
        ],
    )
    def test_li(self, calculator, v, kind, admissible):
        verdict = calculator.li(v)
        assert verdict.kind is kind
        assert verdict.admissible is admissible

    def test_li_half_integer_slopes_agree(self, calculator):
        # at x = 1/2 both boundary segments give y = 0
        assert calculator.li("2,1,0") == Boundary(rank_ok=True)
        assert calculator.li("4,2,0") == Boundary(rank_ok=False)

    def test_li_rank_zero(self, calculator):
        with pytest.raises(RankZero):
            calculator.li("0,1,5/6")

    def test_region_v(self, calculator):
        assert calculator.in_region_v(Fraction(1, 4), Fraction(-1, 2))
        assert not calculator.in_region_v(Fraction(1, 2), Fraction(-1, 4))
        assert not calculator.in_region_v(Fraction(1, 5), Fraction(-9, 10))
        assert calculator.in_region_v(Fraction(1, 10), Fraction(-9, 10))
        assert not calculator.in_region_v(Fraction(1, 10), -1)
        with pytest.raises(NonPositiveAlpha):
            calculator.in_region_v(0, Fraction(-1, 2))

    def test_half_plane_point(self):
        with pytest.raises(NonPositiveAlpha):
            HalfPlanePoint(0, 1)

    def test_wall_alpha_sq_at(self):
        assert wall_alpha_sq_at(Circle(Fraction(5, 6), Fraction(1, 36)), Fraction(5, 6)) == Fraction(1, 36)
        assert wall_alpha_sq_at(Circle(Fraction(-17, 18), Fraction(1, 324)), -1) is None
        assert wall_alpha_sq_at(Circle(Fraction(1, 6), Fraction(1, 36)), 0) is None
        assert wall_alpha_sq_at(VerticalLine(Fraction(-1, 4)), Fraction(-1, 4)) is Crossing.ON_LINE
        assert wall_alpha_sq_at(VerticalLine(Fraction(-1, 4)), 0) is None
        assert wall_alpha_sq_at(Empty(), 0) is None


class TestWallProperties:
    def test_symmetry_and_pencil(self, rng, cases, bound):
        for _ in range(cases):
            v, w = random_truncated(rng, bound), random_truncated(rng, bound)
            wall = numerical_wall(v, w)
            assert numerical_wall(w, v) == wall
            assert numerical_wall(v, w + v.scale(rng.randint(-3, 3))) == wall

    def test_twist_moves_walls(self, rng, cases, bound):
        for _ in range(cases):
            v, w = random_truncated(rng, bound), random_truncated(rng, bound)
            t = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
            assert numerical_wall(twist(v, t), twist(w, t)) == translate_wall(numerical_wall(v, w), -t)

    def test_apex_on_zero_slope_hyperbola(self, rng, cases, bound):
        for _ in range(cases):
            v, w = random_truncated(rng, bound, rank_zero=False), random_truncated(rng, bound)
            wall = numerical_wall(v, w)
            if not isinstance(wall, Circle):
                continue
            mu, rhs = zero_slope_locus(v)
            assert (wall.center - mu) ** 2 - wall.radius_sq == rhs

    def test_rank_zero_walls_share_apex_line(self, rng, cases, bound):
        for _ in range(cases):
            v = random_truncated(rng, bound)
            v = TruncatedCharacter(0, v.ch1 or 1, v.ch2)
            wall = numerical_wall(v, random_truncated(rng, bound))
            if isinstance(wall, Circle):
                assert wall.center == v.ch2 / v.ch1

    def test_walls_of_one_class_do_not_cross(self, rng, cases, bound):
        for _ in range(cases):
            v = random_truncated(rng, bound)
            if delta(v) < 0 or v == TruncatedCharacter(0, 0, 0):
                continue
            first, second = (numerical_wall(v, random_truncated(rng, bound)) for _ in range(2))
            if not (isinstance(first, Circle) and isinstance(second, Circle)):
                continue
            distance_sq = (first.center - second.center) ** 2
            # the circles cross iff |r1 - r2| < d < r1 + r2
            gap = first.radius_sq + second.radius_sq - distance_sq
            assert gap**2 >= 4 * first.radius_sq * second.radius_sq

    def test_beta_pm_are_roots(self, rng, cases, bound):
        for _ in range(cases):
            v = random_truncated(rng, bound, rank_zero=False)
            if delta(v) < 0:
                continue
            for beta in beta_pm(v):
                twisted_ch2 = beta * beta * Fraction(v.ch0, 2) - beta * v.ch1 + v.ch2
                assert twisted_ch2 == QuadraticValue.rational(0)
            assert beta_pm(v)[0] <= beta_pm(v)[1]


class TestSymbolicWalls:
    """solves the equal-slope equation with sympy and compares with the closed forms"""

    ALPHA_SQ, BETA = sympy.symbols("alpha_sq beta")

    def _slope_equation(self, v: TruncatedCharacter, w: TruncatedCharacter) -> sympy.Expr:
        def charge(u: TruncatedCharacter) -> tuple[sympy.Expr, sympy.Expr]:
            r, c, d = (to_sympy(Fraction(x)) for x in u.components())
            ch1 = c - self.BETA * r
            ch2 = d - self.BETA * c + self.BETA**2 / 2 * r
            return self.ALPHA_SQ / 2 * 3 * r - 3 * ch2, 3 * ch1

        (real_v, imag_v), (real_w, imag_w) = charge(v), charge(w)
        return sympy.expand(real_v * imag_w - real_w * imag_v)

    def test_circles(self, rng, symbolic_cases, bound):
        t = sympy.Symbol("t")
        for _ in range(symbolic_cases):
            v, w = random_truncated(rng, bound), random_truncated(rng, bound)
            wall = numerical_wall(v, w)
            equation = self._slope_equation(v, w)
            match wall:
                case Circle(center=center, radius_sq=radius_sq):
                    on_circle = equation.subs(
                        {self.BETA: to_sympy(center) + t, self.ALPHA_SQ: to_sympy(radius_sq) - t**2}
                    )
                    assert sympy.expand(on_circle) == 0, (v, w)
                case VerticalLine(beta=beta):
                    assert sympy.expand(equation.subs(self.BETA, to_sympy(beta))) == 0, (v, w)
                case Everywhere():
                    assert equation == 0

    def test_quoted_radius(self):
        v, w = TruncatedCharacter.parse("5,-2,-1/3"), TruncatedCharacter.parse("-5,12,-41/3")
        apex = sympy.solve(self._slope_equation(v, w).subs(self.BETA, sympy.Rational(-7, 5)), self.ALPHA_SQ)
        assert apex == [sympy.Rational(53, 75)]
