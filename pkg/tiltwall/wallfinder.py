"""
Bounded exhaustive search for destabilizing decompositions target = p + q.

Candidates are enumerated as untwisted lattice characters in (ch0, ch1) strata, each stratum with a finite ch2
window, and pushed through the filter pipeline in :py:class:`tiltwall.enums.FilterName` order.
"""

import logging
from collections import Counter
from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, lcm

from tiltwall.constants import OPLUS_DISCRIMINANT, OPLUS_WALL_CENTER
from tiltwall.enums import Crossing, FilterName, ScanKind
from tiltwall.exactnum import QuadraticValue, as_rational, qv_ceil, qv_floor
from tiltwall.exceptions import DomainError, InvalidTarget
from tiltwall.lattice import delta, truncate, twist, validate
from tiltwall.models.characters import Character, TruncatedCharacter
from tiltwall.models.scan import (
    BoundReport,
    CandidatePair,
    FilterSet,
    Rejection,
    ScanBounds,
    ScanQuery,
    ScanReport,
    Verdict,
    canonical_pair,
)
from tiltwall.models.walls import Circle, Empty, VerticalLine
from tiltwall.tilt import (
    alpha_sq_on_line,
    beta_pm,
    is_left_of_vertical_wall,
    li_admissible,
    numerical_wall,
    wall_alpha_sq_at,
)
from tiltwall.type_alias import RationalLike

logger = logging.getLogger(__name__)

PASS = Verdict(True)


@dataclass(frozen=True)
class _ScanLine:
    """the line beta = beta_ref on which heart membership is tested"""

    query: ScanQuery
    beta_ref: QuadraticValue
    target_delta: Fraction

    @property
    def target(self) -> TruncatedCharacter:
        return self.query.target

    @property
    def filters(self) -> FilterSet:
        return self.query.filters

    def twisted_ch1(self, v: TruncatedCharacter) -> QuadraticValue:
        return QuadraticValue.rational(v.ch1) - self.beta_ref * v.ch0


def _check_target(target: TruncatedCharacter) -> None:
    violations = validate(target)
    if violations:
        raise InvalidTarget(f"Target {target} is not a lattice point: {'; '.join(map(str, violations))}.")


def _ch1_window(line: _ScanLine, rank_p: int, rank_q: int) -> range:
    """all ch1(p) with 0 <= ch1^beta(p) <= ch1^beta(target); the heart filter drops the endpoints"""
    low = qv_floor(line.beta_ref * rank_p)
    high = qv_ceil(QuadraticValue.rational(line.target.ch1) - line.beta_ref * rank_q)
    return range(low, high + 1)


def _lead_is_p(target: TruncatedCharacter, rank_p: int, rank_q: int) -> bool:
    """the lead piece bounds the ch2 window: the larger rank for positive targets"""
    if target.ch0 > 0:
        return rank_p >= rank_q
    return rank_p <= rank_q


def _ch2_window(line: _ScanLine, rank_p: int, ch1_p: int) -> tuple[Fraction, Fraction]:
    """range of ch2(p) allowed by 0 <= Delta(lead) <= Delta(target)"""
    target = line.target
    rank_q, ch1_q = target.ch0 - rank_p, target.ch1 - ch1_p
    lead_is_p = _lead_is_p(target, rank_p, rank_q)
    rank, ch1 = (rank_p, ch1_p) if lead_is_p else (rank_q, ch1_q)
    # Delta = 9 ch1^2 - 18 rank ch2
    ends = (Fraction(9 * ch1 * ch1) / (18 * rank), (9 * ch1 * ch1 - line.target_delta) / (18 * rank))
    low, high = min(ends), max(ends)
    if lead_is_p:
        return low, high
    return target.ch2 - high, target.ch2 - low


def _ch2_numerators(line: _ScanLine, rank_p: int, ch1_p: int) -> range:
    bounds = line.query.bounds
    if bounds.ch2_numerators is not None:
        low, high = bounds.ch2_numerators
    else:
        ch2_low, ch2_high = _ch2_window(line, rank_p, ch1_p)
        low, high = ceil(6 * ch2_low), floor(6 * ch2_high)
    if not line.filters.parity:
        return range(low, high + 1)
    # 6 ch2 = ch1 (mod 2)
    return range(low + (low - ch1_p) % 2, high + 1, 2)


def _strata(line: _ScanLine) -> list[tuple[int, int]]:
    rank_max = line.query.bounds.rank_max
    strata = []
    for rank_p in range(-rank_max, rank_max + 1):
        rank_q = line.target.ch0 - rank_p
        if abs(rank_q) > rank_max or (rank_p == 0 and rank_q == 0):
            continue
        strata.extend((rank_p, ch1_p) for ch1_p in _ch1_window(line, rank_p, rank_q))
    return strata


def _heart(line: _ScanLine, p: TruncatedCharacter, q: TruncatedCharacter) -> Verdict:
    for piece in (p, q):
        twisted = line.twisted_ch1(piece)
        if twisted <= 0:
            return Verdict(False, f"H^2 ch1^beta({piece}) = {twisted} is not positive")
    return PASS


def _parity(p: TruncatedCharacter) -> Verdict:
    six_ch2 = 6 * p.ch2
    if (six_ch2 - p.ch1) % 2 != 0:
        return Verdict(False, f"6*ch2 = {six_ch2} and ch1 = {p.ch1} differ in parity")
    return PASS


def _lead_and_partner(
    target: TruncatedCharacter, p: TruncatedCharacter, q: TruncatedCharacter
) -> tuple[TruncatedCharacter, TruncatedCharacter]:
    return (p, q) if _lead_is_p(target, p.ch0, q.ch0) else (q, p)


def _bounded_discriminant(line: _ScanLine, piece: TruncatedCharacter) -> Verdict:
    piece_delta = delta(piece)
    if not 0 <= piece_delta <= line.target_delta:
        return Verdict(False, f"Delta({piece}) = {piece_delta} outside [0, {line.target_delta}]")
    return PASS


def _discriminant(line: _ScanLine, p: TruncatedCharacter, q: TruncatedCharacter) -> Verdict:
    return _bounded_discriminant(line, _lead_and_partner(line.target, p, q)[0])


def _partner_discriminant(line: _ScanLine, p: TruncatedCharacter, q: TruncatedCharacter) -> Verdict:
    return _bounded_discriminant(line, _lead_and_partner(line.target, p, q)[1])


def _discriminant_additivity(line: _ScanLine, p: TruncatedCharacter, q: TruncatedCharacter) -> Verdict:
    total = delta(p) + delta(q)
    if total > line.target_delta:
        return Verdict(False, f"Delta(p) + Delta(q) = {total} exceeds {line.target_delta}")
    return PASS


def _rank_slope_piece(target: TruncatedCharacter, piece: TruncatedCharacter, circular: bool) -> bool:
    """a positive rank subobject A of E with mu(A) <= mu(E); on circles also beta_-(E) < beta_-(A) <= mu(A)"""
    if piece.ch0 <= 0 or delta(piece) < 0:
        return False
    mu_piece, mu_target = piece.ch1 / piece.ch0, target.ch1 / target.ch0
    if mu_piece > mu_target:
        return False
    if not circular:
        return True
    beta_minus_piece = beta_pm(piece)[0]
    return beta_pm(target)[0] < beta_minus_piece and beta_minus_piece <= mu_piece and mu_piece < mu_target


def _rank_slope(line: _ScanLine, pair: CandidatePair) -> Verdict:
    if line.query.kind is ScanKind.VERTICAL:
        return Verdict(True, "left of the vertical wall only, not applicable")
    target = line.target
    if target.ch0 <= 0 or delta(target) < 0:
        return PASS
    circular = isinstance(pair.wall, Circle)
    if any(_rank_slope_piece(target, piece, circular) for piece in (pair.p, pair.q)):
        return PASS
    return Verdict(False, "no piece of positive rank with the slope conditions of a destabilizing subobject")


def _li(piece: TruncatedCharacter) -> Verdict:
    if piece.ch0 == 0:
        return Verdict(True, "rank zero, not applicable")
    verdict = li_admissible(piece)
    if verdict.admissible:
        return PASS
    return Verdict(False, f"({piece.ch1}/{piece.ch0}, {piece.ch2}/{piece.ch0}) is {verdict}")


def _vertical_crossing(line: _ScanLine, pair: CandidatePair) -> tuple[Verdict, Verdict]:
    """(alpha_positive, region) verdicts on the line beta = beta0"""
    crossing = wall_alpha_sq_at(pair.wall, line.beta_ref.p)
    if crossing is None:
        alpha = Verdict(False, f"{pair.wall} does not meet beta={line.beta_ref} with alpha > 0")
    else:
        alpha = PASS
    if isinstance(pair.wall, Circle | VerticalLine):
        return alpha, PASS
    return alpha, Verdict(False, f"{pair.wall} is not a wall")


def _region_crossing(line: _ScanLine, pair: CandidatePair) -> tuple[Verdict, Verdict]:
    """(alpha_positive, region) verdicts left of the vertical wall"""
    if not isinstance(pair.wall, Circle):
        return Verdict(False, f"{pair.wall} has no point with alpha > 0"), Verdict(False, "not a semicircle")
    if not is_left_of_vertical_wall(pair.wall, line.target):
        return PASS, Verdict(False, f"center {pair.wall.center} is not left of the vertical wall")
    return PASS, PASS


def _is_tangent(line: _ScanLine, pair: CandidatePair) -> bool:
    wall = pair.wall
    if line.query.kind is ScanKind.VERTICAL:
        return isinstance(wall, Circle) and alpha_sq_on_line(wall, line.beta_ref.p) == 0
    return isinstance(wall, Empty) and wall.radius_sq == 0


def _alpha_sq_at_ref(line: _ScanLine, pair: CandidatePair) -> Fraction | None:
    if line.query.kind is ScanKind.VERTICAL:
        crossing = wall_alpha_sq_at(pair.wall, line.beta_ref.p)
        return None if crossing is None or crossing is Crossing.ON_LINE else crossing
    return pair.wall.radius_sq if isinstance(pair.wall, Circle) else None


def _evaluate(line: _ScanLine, p: TruncatedCharacter, q: TruncatedCharacter) -> CandidatePair:
    """runs every enabled filter on the canonical pair (p, q)"""
    bare = CandidatePair(p, q, numerical_wall(line.target, p), None)
    crossing = _vertical_crossing if line.query.kind is ScanKind.VERTICAL else _region_crossing
    alpha_verdict, region_verdict = crossing(line, bare)
    checks: dict[FilterName, Callable[[], Verdict]] = {
        FilterName.HEART: lambda: _heart(line, p, q),
        FilterName.PARITY: lambda: _parity(p),
        FilterName.DISCRIMINANT: lambda: _discriminant(line, p, q),
        FilterName.PARTNER_DISCRIMINANT: lambda: _partner_discriminant(line, p, q),
        FilterName.DISCRIMINANT_ADDITIVITY: lambda: _discriminant_additivity(line, p, q),
        FilterName.ALPHA_POSITIVE: lambda: alpha_verdict,
        FilterName.REGION: lambda: region_verdict,
        FilterName.RANK_SLOPE: lambda: _rank_slope(line, bare),
        FilterName.LI_ON_P: lambda: _li(p),
        FilterName.LI_ON_Q: lambda: _li(q),
    }
    verdicts = {name: checks[name]() for name in FilterName if line.filters.enabled(name)}
    return CandidatePair(
        p,
        q,
        bare.wall,
        _alpha_sq_at_ref(line, bare),
        verdicts=verdicts,
        tangent=_is_tangent(line, bare),
    )


def _scan_stratum(line: _ScanLine, stratum: tuple[int, int]) -> list[CandidatePair]:
    rank_p, ch1_p = stratum
    pairs = []
    for numerator in _ch2_numerators(line, rank_p, ch1_p):
        piece = TruncatedCharacter(rank_p, ch1_p, Fraction(numerator, 6))
        p, q = canonical_pair(piece, line.target - piece)
        pairs.append(_evaluate(line, p, q))
    return pairs


def _run(line: _ScanLine, workers: int) -> ScanReport:
    strata = _strata(line)
    logger.debug("scan %s of %s: %d strata", line.query.description, line.target, len(strata))
    results: Iterable[list[CandidatePair]]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(lambda stratum: _scan_stratum(line, stratum), strata))
    else:
        results = (_scan_stratum(line, stratum) for stratum in strata)

    unique: dict[tuple[TruncatedCharacter, TruncatedCharacter], CandidatePair] = {}
    for pairs in results:
        for pair in pairs:
            unique.setdefault(pair.key, pair)
    ordered = [unique[key] for key in sorted(unique)]

    survivors, rejected = [], []
    for pair in ordered:
        failure = pair.first_failure
        if failure is None:
            survivors.append(pair)
        else:
            rejected.append(Rejection(pair, failure))
    counts = Counter(rejection.filter.value for rejection in rejected)
    counts["survivors"] = len(survivors)
    tangent = [pair for pair in ordered if pair.tangent and pair.verdicts.get(FilterName.HEART, PASS).passed]

    logger.debug("enumerated %d candidate pairs", len(ordered))
    for pair in survivors:
        logger.info("survivor %s + %s on %s", pair.p, pair.q, pair.wall)
    return ScanReport(line.query, survivors, rejected, dict(counts), tangent)


def scan_vertical(
    target: Character,
    beta0: RationalLike,
    bounds: ScanBounds,
    filters: FilterSet = FilterSet(),
    workers: int = 1,
) -> ScanReport:
    """
    All decompositions target = p + q with a numerical wall crossing the line beta = beta0.

    :param target: the class to destabilize
    :param beta0: the vertical line
    :param bounds: rank cap and optional ch2 window
    :param filters: enabled filters
    :param workers: number of threads evaluating strata
    :return: the scan report
    :raises InvalidTarget: if the target is not a lattice point or ch1^beta0(target) <= 0
    """
    target = truncate(target)
    _check_target(target)
    beta0 = as_rational(beta0)
    if twist(target, beta0).ch1 <= 0:
        raise InvalidTarget(f"{target} is not in the heart at beta={beta0}: H^2 ch1^beta <= 0.")
    query = ScanQuery(ScanKind.VERTICAL, target, bounds, filters, beta0)
    return _run(_ScanLine(query, QuadraticValue.rational(beta0), delta(target)), workers)


def scan_region_left(
    target: Character,
    bounds: ScanBounds,
    filters: FilterSet = FilterSet(),
    workers: int = 1,
) -> ScanReport:
    """
    All decompositions with a semicircular wall left of the vertical wall beta = mu_H(target).
    Such walls meet beta = beta_-(target), where heart membership is tested.

    :raises InvalidTarget: for targets of rank <= 0, negative discriminant or off the lattice
    """
    target = truncate(target)
    _check_target(target)
    if target.ch0 <= 0:
        raise InvalidTarget(f"Left-of-vertical scans need positive rank, got {target}.")
    if delta(target) < 0:
        raise InvalidTarget(f"{target} has negative discriminant.")
    query = ScanQuery(ScanKind.REGION_LEFT, target, bounds, filters)
    return _run(_ScanLine(query, beta_pm(target)[0], delta(target)), workers)


def recheck(report: ScanReport, pair: CandidatePair) -> CandidatePair:
    """re-evaluates one pair under the report's query"""
    query = report.query
    if query.kind is ScanKind.VERTICAL and query.beta0 is not None:
        beta_ref = QuadraticValue.rational(query.beta0)
    else:
        beta_ref = beta_pm(query.target)[0]
    return _evaluate(_ScanLine(query, beta_ref, delta(query.target)), pair.p, pair.q)


def derived_bound_report(target: Character) -> BoundReport:
    """
    The window 3b^2 - K <= ac <= 3b^2, K = Delta_H(target)/3, on twisted coordinates
    ch^beta = (a, b H, c/6 H^2) of a destabilizing piece at an integral beta.
    """
    return BoundReport(truncate(target), delta(target) / 3)


def twisted_coordinates(v: Character, beta: RationalLike) -> tuple[int, Fraction, Fraction]:
    """
    Integral display coordinates of ch^beta: (a, b, c) with ch1^beta = b/n and ch2^beta = c/m,
    n the denominator of beta and m = lcm(6, 2n^2).

    Example::

        twisted_coordinates(TruncatedCharacter(-1, 0, Fraction(1, 3)), Fraction(5, 6))  # (-1, 5, -1)
    """
    beta = as_rational(beta)
    twisted = twist(truncate(v), beta)
    n = beta.denominator
    return twisted.ch0, twisted.ch1 * n, twisted.ch2 * lcm(6, 2 * n * n)


def oplus_exclusion(r: int) -> bool:
    """
    Whether (5/6)^2 > (23/3) / (4r(r-4)), which excludes an O_X^r[1] quotient on the wall W(5/6, 5/6).

    :raises DomainError: for r <= 4
    """
    if r <= 4:
        raise DomainError(f"r must be at least 5, got {r}.")
    return OPLUS_WALL_CENTER**2 > OPLUS_DISCRIMINANT / (4 * r * (r - 4))
