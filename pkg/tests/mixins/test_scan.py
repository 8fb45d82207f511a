from fractions import Fraction

import pytest

from tiltwall import FilterName, FilterSet, TiltWall, TruncatedCharacter
from tiltwall.exactnum import QuadraticValue
from tiltwall.exceptions import DomainError, InvalidTarget, TiltWallUserError
from tiltwall.lattice import delta, twist
from tiltwall.models.scan import ScanReport
from tiltwall.models.walls import Circle, VerticalLine
from tiltwall.tilt import beta_pm, li_admissible, numerical_wall, wall_alpha_sq_at
from tiltwall.wallfinder import recheck

NO_LI = [FilterName.LI_ON_P, FilterName.LI_ON_Q]
LEAD_ONLY = [*NO_LI, FilterName.PARTNER_DISCRIMINANT]


def pieces(*pairs: tuple[str, str]) -> set[frozenset[TruncatedCharacter]]:
    return {frozenset(map(TruncatedCharacter.parse, pair)) for pair in pairs}


def lattice_pairs(
    target: TruncatedCharacter, rank_max: int, numerators: tuple[int, int]
) -> list[tuple[TruncatedCharacter, TruncatedCharacter]]:
    """every split of target with both ranks bounded, ch1(p) in [-30, 30] and 6*ch2(p) in the window"""
    pairs = []
    for rank in range(-rank_max, rank_max + 1):
        for ch1 in range(-30, 31):
            for numerator in range(numerators[0], numerators[1] + 1):
                if (numerator - ch1) % 2:
                    continue
                p = TruncatedCharacter(rank, ch1, Fraction(numerator, 6))
                q = target - p
                if abs(q.ch0) > rank_max or (p.ch0 == 0 and q.ch0 == 0):
                    continue
                pairs.append((p, q))
    return pairs


def li_rejects(p: TruncatedCharacter, q: TruncatedCharacter) -> bool:
    return any(piece.ch0 != 0 and not li_admissible(piece).admissible for piece in (p, q))


def bounded_discriminants(target: TruncatedCharacter, p: TruncatedCharacter, q: TruncatedCharacter) -> bool:
    target_delta = delta(target)
    return all(0 <= delta(piece) <= target_delta for piece in (p, q)) and delta(p) + delta(q) <= target_delta


def naive_vertical_survivors(
    target: TruncatedCharacter, beta0: Fraction, rank_max: int, numerators: tuple[int, int]
) -> set[frozenset[TruncatedCharacter]]:
    """unoptimized reference scan along beta = beta0 with every filter on"""
    found = set()
    for p, q in lattice_pairs(target, rank_max, numerators):
        if twist(p, beta0).ch1 <= 0 or twist(q, beta0).ch1 <= 0:
            continue
        if not bounded_discriminants(target, p, q):
            continue
        wall = numerical_wall(target, p)
        if not isinstance(wall, Circle | VerticalLine) or wall_alpha_sq_at(wall, beta0) is None:
            continue
        if not li_rejects(p, q):
            found.add(frozenset((p, q)))
    return found


def destabilizing_slope(target: TruncatedCharacter, piece: TruncatedCharacter) -> bool:
    if piece.ch0 <= 0 or delta(piece) < 0:
        return False
    mu = piece.ch1 / piece.ch0
    return beta_pm(target)[0] < beta_pm(piece)[0] <= mu < target.ch1 / target.ch0


def naive_region_survivors(
    target: TruncatedCharacter, rank_max: int, numerators: tuple[int, int]
) -> set[frozenset[TruncatedCharacter]]:
    """unoptimized reference scan left of the vertical wall with every filter on"""
    beta_minus = beta_pm(target)[0]
    found = set()
    for p, q in lattice_pairs(target, rank_max, numerators):
        if any(QuadraticValue.rational(piece.ch1) - beta_minus * piece.ch0 <= 0 for piece in (p, q)):
            continue
        if not bounded_discriminants(target, p, q):
            continue
        wall = numerical_wall(target, p)
        if not isinstance(wall, Circle) or wall.center >= target.ch1 / target.ch0:
            continue
        if not any(destabilizing_slope(target, piece) for piece in (p, q)):
            continue
        if not li_rejects(p, q):
            found.add(frozenset((p, q)))
    return found


def assert_sound(report: ScanReport) -> None:
    enabled = [name for name in FilterName if report.query.filters.enabled(name)]
    for pair in report.survivors:
        assert pair.p + pair.q == report.target
        assert pair.p <= pair.q
        rechecked = recheck(report, pair)
        assert list(rechecked.verdicts) == enabled
        assert rechecked.first_failure is None
        assert all(verdict.passed for verdict in pair.verdicts.values())
    for rejection in report.rejected:
        assert rejection.pair.first_failure is rejection.filter
    keys = [pair.key for pair in report.survivors] + [rejection.pair.key for rejection in report.rejected]
    assert len(keys) == len(set(keys))
    assert sum(report.counts.values()) == report.enumerated
    assert report.counts["survivors"] == len(report.survivors)


class TestScanVertical:
    RANK_FIVE_BEFORE_LI = pieces(
        ("3,-2,2/3", "2,0,-1"),
        ("3,-1,-5/6", "2,-1,1/2"),
        ("3,-1,-1/2", "2,-1,1/6"),
        ("4,-2,1/3", "1,0,-2/3"),
        ("5,-3,5/6", "0,1,-7/6"),
        ("6,-4,4/3", "-1,2,-5/3"),
    )

    def test_rank_five_before_li(self, calculator):
        report = calculator.scan_vertical("5,-2,-1/3", -1, 8, disable=LEAD_ONLY)
        assert report.survivor_pieces() == self.RANK_FIVE_BEFORE_LI
        assert_sound(report)

    def test_rank_five_partner_discriminant(self, calculator):
        report = calculator.scan_vertical("5,-2,-1/3", -1, 8, disable=NO_LI)
        negative_partner = pieces(("3,-1,-5/6", "2,-1,1/2"))
        assert delta(TruncatedCharacter.parse("2,-1,1/2")) == -9
        assert report.survivor_pieces() == self.RANK_FIVE_BEFORE_LI - negative_partner
        partner_rejections = {
            rejection.pair.pieces
            for rejection in report.rejected
            if rejection.filter is FilterName.PARTNER_DISCRIMINANT
        }
        assert negative_partner <= partner_rejections

    def test_rank_slope_is_not_applied_on_vertical_lines(self, calculator):
        report = calculator.scan_vertical("5,-2,-1/3", -1, 8, disable=LEAD_ONLY)
        assert report.counts.get(FilterName.RANK_SLOPE.value, 0) == 0
        for pair in report.survivors:
            assert pair.verdicts[FilterName.RANK_SLOPE].reason.endswith("not applicable")

    def test_second_case_before_li(self, calculator):
        candidates = pieces(
            ("3,-2,2/3", "2,0,-4/3"),
            ("3,-1,-5/6", "2,-1,1/6"),
            ("3,-1,-7/6", "2,-1,1/2"),
            ("3,-1,-3/2", "2,-1,5/6"),
            ("4,-2,0", "1,0,-2/3"),
            ("5,-3,1/2", "0,1,-7/6"),
            ("6,-4,1", "-1,2,-5/3"),
            ("7,-5,3/2", "-2,3,-13/6"),
            ("8,-6,2", "-3,4,-8/3"),
            ("4,-2,1/3", "1,0,-1"),
            ("5,-3,5/6", "0,1,-3/2"),
            ("6,-4,4/3", "-1,2,-2"),
        )
        before = calculator.scan_vertical("5,-2,-2/3", -1, 8, disable=LEAD_ONLY)
        assert before.survivor_pieces() == candidates
        assert_sound(before)

        after = calculator.scan_vertical("5,-2,-2/3", -1, 8)
        assert after.survivors == []
        rejected = {rejection.pair.pieces: rejection.pair for rejection in after.rejected}
        for candidate in candidates:
            verdicts = rejected[candidate].verdicts
            assert not (verdicts[FilterName.LI_ON_P].passed and verdicts[FilterName.LI_ON_Q].passed)

    @pytest.mark.parametrize(("target", "beta"), [("5,-2,-1/3", -1), ("5,-2,-2/3", -1), ("-5,2,1/3", 0)])
    def test_no_walls(self, calculator, target, beta):
        report = calculator.scan_vertical(target, beta, 8)
        assert report.survivors == []
        assert report.enumerated > 0
        assert_sound(report)

    def test_rank_minus_five_before_li(self, calculator):
        report = calculator.scan_vertical("-5,2,1/3", 0, 8, disable=NO_LI)
        assert report.survivor_pieces() == pieces(("-3,1,-1/6", "-2,1,1/2"))
        assert not li_admissible(TruncatedCharacter.parse("-3,1,-1/6")).admissible

    def test_quartic_curve(self, calculator):
        before = calculator.scan_vertical("0,1,5/6", "5/6", 6, disable=NO_LI)
        three = pieces(("-3,-2,-2/3", "3,3,3/2"), ("-2,-1,-1/6", "2,2,1"), ("-1,0,1/3", "1,1,1/2"))
        assert before.survivor_pieces() == three
        # O_X[1] quotient on W(5/6, 5/6) needs a partner of discriminant -6
        lead_only = calculator.scan_vertical("0,1,5/6", "5/6", 6, disable=LEAD_ONLY)
        assert lead_only.survivor_pieces() == three | pieces(("-1,0,0", "1,1,5/6"))
        after = calculator.scan_vertical("0,1,5/6", "5/6", 6)
        [survivor] = after.survivors
        assert survivor.pieces == frozenset(map(TruncatedCharacter.parse, ("-1,0,1/3", "1,1,1/2")))
        assert survivor.wall == Circle(Fraction(5, 6), Fraction(1, 36))
        assert survivor.alpha_sq_at_ref == Fraction(1, 36)
        assert_sound(after)

    def test_twisted_curve(self, calculator):
        before = calculator.scan_vertical("0,1,1/6", "1/6", 6, disable=NO_LI)
        assert before.survivor_pieces() == pieces(
            ("-1,0,0", "1,1,1/6"), ("-2,0,0", "2,1,1/6"), ("-3,0,0", "3,1,1/6")
        )
        [survivor] = calculator.scan_vertical("0,1,1/6", "1/6", 6).survivors
        assert survivor.p == TruncatedCharacter(-1, 0, 0)
        assert survivor.q == TruncatedCharacter(1, 1, Fraction(1, 6))
        assert survivor.wall == Circle(Fraction(1, 6), Fraction(1, 36))
        assert_sound(before)

    @pytest.mark.parametrize(
        ("target", "beta"), [("4,-1,-5/6", "-1/3"), ("5,-1,-7/6", "-1/4"), ("6,-1,-3/2", "-1/5")]
    )
    def test_bundles_on_heart_line(self, calculator, target, beta):
        report = calculator.scan_vertical(target, beta, 6)
        assert report.survivors == []
        assert_sound(report)

    def test_filters_are_reported(self, calculator):
        report = calculator.scan_vertical("5,-2,-1/3", -1, 8)
        assert set(report.counts) <= {name.value for name in FilterName} | {"survivors"}
        assert report.counts["survivors"] == 0

    def test_parity_off_enlarges_enumeration(self, calculator):
        with_parity = calculator.scan_vertical("0,1,5/6", "5/6", 4)
        without = calculator.scan_vertical("0,1,5/6", "5/6", 4, disable=[FilterName.PARITY])
        assert without.enumerated > with_parity.enumerated
        lattice_pairs = {pair.key for pair in with_parity.survivors}
        assert lattice_pairs <= {pair.key for pair in without.survivors}

    def test_tangent_pairs(self, calculator):
        for report in (
            calculator.scan_vertical("-5,2,1/3", 0, 8, disable=NO_LI),
            calculator.scan_vertical("4,-1,-5/6", -1, 6, disable=NO_LI),
        ):
            for pair in report.tangent:
                assert isinstance(pair.wall, Circle)
                assert wall_alpha_sq_at(pair.wall, report.query.beta0) is None
                assert pair.verdicts[FilterName.HEART].passed
            assert not any(pair.tangent for pair in report.survivors)

    def test_explicit_ch2_window(self, calculator):
        report = calculator.scan_vertical("0,1,5/6", "5/6", 6, disable=NO_LI, ch2_numerators=(0, 4))
        assert report.survivor_pieces() == pieces(("-1,0,1/3", "1,1,1/2"))

    @pytest.mark.parametrize(
        ("target", "beta"),
        [("0,1,5/6", "5/6"), ("-5,2,1/3", "0"), ("1,0,-1/3", "-1"), ("2,-1,1/6", "-1")],
    )
    def test_matches_naive_scan(self, calculator, config, target, beta):
        rank_max = config.getint("scans", "oracle_rank_max")
        numerators = (-12, 12)
        report = calculator.scan_vertical(target, beta, rank_max, ch2_numerators=numerators)
        expected = naive_vertical_survivors(
            TruncatedCharacter.parse(target), Fraction(beta), rank_max, numerators
        )
        assert report.survivor_pieces() == expected

    def test_invalid_targets(self, calculator):
        with pytest.raises(InvalidTarget, match="not in the heart"):
            calculator.scan_vertical("4,-1,-5/6", 0, 4)
        with pytest.raises(InvalidTarget, match="not a lattice point"):
            calculator.scan_vertical("1,1/2,0", -1, 4)
        with pytest.raises(TiltWallUserError, match="rank_max"):
            calculator.scan_vertical("5,-2,-1/3", -1, 0)
        with pytest.raises(TiltWallUserError, match="Unknown filter"):
            calculator.scan_vertical("5,-2,-1/3", -1, 4, disable=["bogus"])


class TestScanRegion:
    EXPECTED = pieces(("5,-2,-1/3", "-1,1,-1/2"), ("3,-1,-1/6", "1,0,-2/3"))

    @pytest.mark.parametrize("rank_max", range(6, 13))
    def test_rank_four(self, calculator, rank_max):
        report = calculator.scan_left_of_vertical_wall("4,-1,-5/6", rank_max)
        assert report.survivor_pieces() == self.EXPECTED
        assert [pair.wall for pair in report.survivors] == [
            Circle(Fraction(-17, 18), Fraction(1, 324)),
            Circle(Fraction(-11, 6), Fraction(73, 36)),
        ]
        for pair in report.survivors:
            assert pair.wall.center < Fraction(-1, 4)
            assert pair.alpha_sq_at_ref == pair.wall.radius_sq
        assert_sound(report)

    def test_line_ideal(self, calculator):
        report = calculator.scan_left_of_vertical_wall("1,0,-1/3", 4)
        assert report.survivors == []
        assert_sound(report)

    @pytest.mark.parametrize("target", ["4,-1,-5/6", "1,0,-1/3", "3,-1,-1/6", "5,-2,-1/3"])
    def test_matches_naive_scan(self, calculator, config, target):
        rank_max = config.getint("scans", "oracle_rank_max")
        numerators = (-12, 12)
        report = calculator.scan_left_of_vertical_wall(target, rank_max, ch2_numerators=numerators)
        expected = naive_region_survivors(TruncatedCharacter.parse(target), rank_max, numerators)
        assert report.survivor_pieces() == expected
        assert_sound(report)

    def test_invalid_targets(self, calculator):
        with pytest.raises(InvalidTarget, match="positive rank"):
            calculator.scan_left_of_vertical_wall("0,1,5/6", 4)
        with pytest.raises(InvalidTarget, match="negative discriminant"):
            calculator.scan_left_of_vertical_wall("1,0,1", 4)

    def test_workers_do_not_change_reports(self, config):
        workers = config.getint("scans", "workers")
        for scan in (
            lambda calculator: calculator.scan_left_of_vertical_wall("4,-1,-5/6", 8),
            lambda calculator: calculator.scan_vertical("0,1,5/6", "5/6", 6, disable=NO_LI),
        ):
            assert scan(TiltWall(workers=workers)).to_json() == scan(TiltWall(workers=1)).to_json()

    def test_report_json(self, calculator):
        report = calculator.scan_left_of_vertical_wall("4,-1,-5/6", 5)
        data = report.to_json()
        assert data["query"]["kind"] == "region_left"
        assert data["survivors"][0]["wall"] == {"type": "circle", "center": "-17/18", "radius_sq": "1/324"}
        assert ScanReport.from_json(data).to_json() == data


class TestScanHelpers:
    @pytest.mark.parametrize(("target", "k"), [("4,-1,-5/6", 23), ("5,-2,-1/3", 22), ("5,-2,-2/3", 32)])
    def test_bound_report(self, calculator, target, k):
        report = calculator.bound_report(target)
        assert report.k == k
        assert str(report) == f"3b^2-{k} <= ac <= 3b^2"

    def test_twisted_coordinates(self, calculator):
        assert calculator.twisted_coordinates("-1,0,1/3", "5/6") == (-1, 5, -1)
        assert calculator.twisted_coordinates("3,-2,2/3", -1) == (3, 1, 1)

    def test_oplus(self, calculator):
        assert calculator.oplus_excluded(5)
        assert calculator.oplus_excluded(6)
        with pytest.raises(DomainError, match="at least 5"):
            calculator.oplus_excluded(4)

    def test_filter_set(self):
        filters = FilterSet.without("li_on_p", FilterName.LI_ON_Q)
        assert filters.disabled == NO_LI
        assert FilterSet.from_json(filters.to_json()) == filters
