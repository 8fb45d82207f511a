"""golden fixture corpus: loading, replaying and exact comparison"""

import json
import logging
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from tiltwall.calculator import TiltWall
from tiltwall.enums import QueryType
from tiltwall.exactnum import INFINITY, Slope, as_rational, format_rational
from tiltwall.exceptions import MalformedFixture, TiltWallError, TiltWallUserError
from tiltwall.models.characters import TruncatedCharacter
from tiltwall.models.fixture import Fixture
from tiltwall.models.scan import ScanReport
from tiltwall.models.walls import wall_from_json
from tiltwall.type_alias import JsonDict

logger = logging.getLogger(__name__)

DEFAULT_CORPUS = Path(__file__).parent / "data" / "fixtures"


class EmptyCorpus(UserWarning):
    """the fixture directory holds no fixture files"""


class BoundsTooSmall(UserWarning):
    """an expected candidate of a scan fixture lies outside the scan's rank bound"""


@dataclass(frozen=True)
class FixtureResult:
    fixture: Fixture
    passed: bool
    actual: Any = None
    message: str = ""

    def to_json(self) -> JsonDict:
        return {
            "name": self.fixture.name,
            "file": self.fixture.path.name,
            "passed": self.passed,
            "actual": self.actual,
            "message": self.message,
        }


@dataclass
class CorpusSummary:
    results: list[FixtureResult] = field(default_factory=list)

    @property
    def failed(self) -> list[FixtureResult]:
        return [result for result in self.results if not result.passed]

    @property
    def passed(self) -> bool:
        return not self.failed

    def to_json(self) -> JsonDict:
        return {
            "total": len(self.results),
            "failed": len(self.failed),
            "results": [result.to_json() for result in self.results],
        }


def load_fixtures(directory: Path | str | None = None) -> list[Fixture]:
    """
    Reads every ``*.json`` file of ``directory`` in name order.
    A file holds one fixture object or a list of them.

    :param directory: Optional. Corpus directory. Default: the corpus shipped with tiltwall.
    :return: the fixtures; warns with :py:class:`EmptyCorpus` if there are none
    :raises MalformedFixture: for invalid JSON, schema violations and duplicate names
    """
    directory = DEFAULT_CORPUS if directory is None else Path(directory)
    if not directory.is_dir():
        raise TiltWallUserError(f"Fixture directory {directory} does not exist.")
    fixtures: list[Fixture] = []
    names: set[str] = set()
    for path in sorted(directory.glob("*.json")):
        try:
            content = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as e:
            raise MalformedFixture(path, "<root>", f"invalid JSON: {e}") from e
        for data in content if isinstance(content, list) else [content]:
            fixture = Fixture.from_json(data, path)
            if fixture.name in names:
                raise MalformedFixture(path, "name", f"duplicate fixture name '{fixture.name}'")
            names.add(fixture.name)
            fixtures.append(fixture)
    if not fixtures:
        warnings.warn(f"No fixtures found in {directory}.", EmptyCorpus, stacklevel=2)
    return fixtures


def _param(fixture: Fixture, key: str) -> Any:
    try:
        return fixture.params[key]
    except KeyError:
        raise MalformedFixture(fixture.path, f"params.{key}", "missing") from None


def _slope_json(slope: Slope) -> str:
    return "+inf" if slope is INFINITY else format_rational(slope)  # type: ignore[arg-type]


def _pieces(pair: list[str]) -> frozenset[TruncatedCharacter]:
    return frozenset(TruncatedCharacter.parse(piece) for piece in pair)


def _check_scan_bounds(fixture: Fixture) -> None:
    rank_max = int(_param(fixture, "rank_max"))
    expect = fixture.expect if isinstance(fixture.expect, dict) else {}
    for survivor in expect.get("survivors", []):
        for piece in _pieces(survivor["pieces"]):
            if abs(piece.ch0) > rank_max:
                warnings.warn(
                    f"{fixture.name}: expected piece {piece} exceeds rank_max={rank_max}.",
                    BoundsTooSmall,
                    stacklevel=3,
                )


def _run_scan(fixture: Fixture, calculator: TiltWall) -> ScanReport:
    _check_scan_bounds(fixture)
    disable = fixture.params.get("disable", [])
    rank_max = int(_param(fixture, "rank_max"))
    if fixture.query is QueryType.SCAN_VERTICAL:
        numerators = fixture.params.get("ch2_numerators")
        return calculator.scan_vertical(
            _param(fixture, "target"),
            _param(fixture, "beta"),
            rank_max,
            disable=disable,
            ch2_numerators=tuple(numerators) if numerators else None,  # type: ignore[arg-type]
        )
    return calculator.scan_left_of_vertical_wall(_param(fixture, "target"), rank_max, disable=disable)


def _run_ku(fixture: Fixture, calculator: TiltWall) -> Any:
    operation = _param(fixture, "op")
    match operation:
        case "compose":
            return calculator.ku_compose(_param(fixture, "k")).to_json()
        case "decompose":
            return calculator.ku_decompose(_param(fixture, "v")).to_json()
        case "member":
            return calculator.in_kuznetsov_component(_param(fixture, "v"))
        case "serre":
            return calculator.serre(_param(fixture, "k"), bool(fixture.params.get("shift", False))).to_json()
        case "pairing":
            return [list(row) for row in calculator.pairing_matrix()]
        case _:
            raise MalformedFixture(fixture.path, "params.op", f"unknown Kuznetsov operation '{operation}'")


def evaluate(fixture: Fixture, calculator: TiltWall) -> Any:
    """
    Runs the query of ``fixture``.

    :return: the answer in its JSON form; scans return the full :py:class:`ScanReport`
    """
    params = fixture.params
    match fixture.query:
        case QueryType.CHI:
            return format_rational(calculator.chi(_param(fixture, "v"), params.get("w")))
        case QueryType.DELTA:
            return format_rational(calculator.discriminant(_param(fixture, "v")))
        case QueryType.WALL:
            return calculator.wall(_param(fixture, "v"), _param(fixture, "w")).to_json()
        case QueryType.LOCUS:
            mu, rhs = calculator.zero_slope_locus(_param(fixture, "v"))
            return {"mu": format_rational(mu), "rhs": format_rational(rhs)}
        case QueryType.LI:
            verdict = calculator.li(_param(fixture, "v"))
            return {"kind": verdict.kind.value, "admissible": verdict.admissible}
        case QueryType.SLOPE_LIMIT:
            return _slope_json(calculator.limit_slope(_param(fixture, "v"), _param(fixture, "beta")))
        case QueryType.SCAN_VERTICAL | QueryType.SCAN_REGION:
            return _run_scan(fixture, calculator)
        case QueryType.BOUND:
            return format_rational(calculator.bound_report(_param(fixture, "target")).k)
        case QueryType.OPLUS:
            return calculator.oplus_excluded(int(_param(fixture, "r")))
        case QueryType.KU:
            return _run_ku(fixture, calculator)
        case QueryType.ORBIT:
            return [k.to_json() for k in calculator.orbit(_param(fixture, "k"))]
        case QueryType.DIM:
            return calculator.expected_dim(_param(fixture, "v"))


def _scan_matches(expect: JsonDict, report: ScanReport) -> tuple[bool, str]:
    expected = {_pieces(survivor["pieces"]): survivor.get("wall") for survivor in expect["survivors"]}
    actual = {pair.pieces: pair.wall for pair in report.survivors}
    if set(expected) != set(actual):
        missing = [sorted(map(str, pieces)) for pieces in set(expected) - set(actual)]
        extra = [sorted(map(str, pieces)) for pieces in set(actual) - set(expected)]
        return False, f"missing {missing}, unexpected {extra}"
    for pieces, wall in expected.items():
        if wall is not None and wall_from_json(wall) != actual[pieces]:
            return False, f"wall of {sorted(map(str, pieces))} is {actual[pieces]}"
    return True, ""


def _values_match(expect: Any, actual: Any) -> bool:
    """exact comparison; rational literals compare by value"""
    if isinstance(expect, dict) and isinstance(actual, dict):
        if expect.keys() != actual.keys():
            return False
        return all(_values_match(expect[key], actual[key]) for key in expect)
    if isinstance(expect, list) and isinstance(actual, list):
        return len(expect) == len(actual) and all(map(_values_match, expect, actual))
    if isinstance(expect, bool) or isinstance(actual, bool):
        return expect is actual
    if isinstance(actual, str) and isinstance(expect, str | int) and actual != "+inf":
        try:
            return as_rational(expect) == as_rational(actual)
        except TiltWallUserError:
            return expect == actual
    return bool(expect == actual)


def run_fixture(fixture: Fixture, calculator: TiltWall | None = None) -> FixtureResult:
    """
    Replays one fixture and compares its answer exactly.
    Expected errors are written as ``{"error": "ClassName"}``.

    :raises MalformedFixture: if the parameters do not fit the query
    """
    calculator = calculator or TiltWall()
    expects_error = isinstance(fixture.expect, dict) and "error" in fixture.expect
    try:
        actual = evaluate(fixture, calculator)
    except MalformedFixture:
        raise
    except TiltWallUserError as e:
        raise MalformedFixture(fixture.path, "params", str(e)) from e
    except TiltWallError as e:
        error = type(e).__name__
        if expects_error and fixture.expect["error"] == error:
            return FixtureResult(fixture, True, {"error": error})
        return FixtureResult(fixture, False, {"error": error}, str(e))
    if expects_error:
        return FixtureResult(fixture, False, actual, f"expected {fixture.expect['error']}")
    if isinstance(actual, ScanReport):
        if not isinstance(fixture.expect, dict) or "survivors" not in fixture.expect:
            raise MalformedFixture(fixture.path, "expect", "scan fixtures expect an object with 'survivors'")
        passed, message = _scan_matches(fixture.expect, actual)
        survivors = [
            {"pieces": [str(pair.p), str(pair.q)], "wall": pair.wall.to_json()} for pair in actual.survivors
        ]
        return FixtureResult(fixture, passed, {"survivors": survivors}, message)
    passed = _values_match(fixture.expect, actual)
    return FixtureResult(fixture, passed, actual, "" if passed else f"expected {fixture.expect}")


def verify(directory: Path | str | None = None, calculator: TiltWall | None = None) -> CorpusSummary:
    """
    Replays the whole corpus.

    :param directory: Optional. Corpus directory. Default: the corpus shipped with tiltwall.
    :param calculator: Optional. Calculator to run the fixtures on.
    :return: one result per fixture, in load order
    """
    calculator = calculator or TiltWall()
    summary = CorpusSummary()
    for fixture in load_fixtures(directory):
        result = run_fixture(fixture, calculator)
        logger.info("%s %s", "PASS" if result.passed else "FAIL", fixture.name)
        summary.results.append(result)
    return summary
