import argparse
import importlib.metadata
import json
import logging
import os
import sys
from collections.abc import Callable
from pathlib import Path
from typing import Any, TextIO

from colorama import Fore, Style, just_fix_windows_console

from tiltwall.calculator import TiltWall
from tiltwall.constants import ENV_LOG_LEVEL, ENV_NO_COLOR
from tiltwall.enums import FilterName
from tiltwall.exactnum import format_rational
from tiltwall.exceptions import DomainError, TiltWallError, TiltWallUserError
from tiltwall.fixtures import CorpusSummary, verify
from tiltwall.models.scan import ScanReport
from tiltwall.models.walls import WallLocus

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3

KU_ACTIONS = ("decompose", "compose", "serre", "orbit", "dim", "member")

# options whose values may start with "-", e.g. --w "-1,1,-1/2"
LITERAL_OPTIONS = frozenset({"--v", "--w", "--target", "--beta"})


def _version() -> str:
    try:
        return importlib.metadata.version("tiltwall")
    except importlib.metadata.PackageNotFoundError:
        return "unknown"


def _add_scan_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--target", required=True, help="truncated character 'r,c1,c2' (or a full character)")
    parser.add_argument("--rank-max", type=int, required=True, help="bound on |ch0| of both pieces")
    parser.add_argument("--no-li", action="store_true", help="disable Li's bound on both pieces")
    parser.add_argument(
        "--disable",
        action="append",
        default=[],
        choices=[name.value for name in FilterName],
        metavar="FILTER",
        help="disable a filter; may be repeated. One of: " + ", ".join(name.value for name in FilterName),
    )
    parser.add_argument("--svg", type=Path, help="optional SVG file with the surviving walls")


def _attach_literals(args: list[str]) -> list[str]:
    """rewrites '--v -1,0,1/3' as '--v=-1,0,1/3' so that argparse does not read the value as an option"""
    attached: list[str] = []
    values = iter(args)
    for arg in values:
        if arg in LITERAL_OPTIONS:
            value = next(values, None)
            attached.append(arg if value is None else f"{arg}={value}")
        else:
            attached.append(arg)
    return attached


def parse_args(args: list[str]) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="tiltwall", description="Exact tilt-stability wall computations on a smooth cubic threefold."
    )
    parser.add_argument(
        "-v",
        "--version",
        action="version",
        version=f"tiltwall {_version()}",
        help="Installed version of tiltwall",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--workers", type=int, help="threads used by scans (default: $TILTWALL_WORKERS or 1)")
    parser.add_argument(
        "--log-level",
        default=os.environ.get(ENV_LOG_LEVEL, "WARNING"),
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="log level on stderr (default: $TILTWALL_LOG_LEVEL or WARNING)",
    )
    subparsers = parser.add_subparsers(help="choose a computation.", dest="command", required=True)

    chi_parser = subparsers.add_parser("chi", help="Euler characteristic chi(v), or the pairing chi(v, w)")
    chi_parser.add_argument("--v", required=True, help="full character 'r,c1,c2,c3'")
    chi_parser.add_argument("--w", help="optional second full character")

    delta_parser = subparsers.add_parser("delta", help="H-discriminant")
    delta_parser.add_argument("--v", required=True)

    wall_parser = subparsers.add_parser("wall", help="numerical wall between two classes")
    wall_parser.add_argument("--v", required=True)
    wall_parser.add_argument("--w", required=True)
    wall_parser.add_argument("--svg", type=Path, help="optional SVG file with the wall")

    for name, help_text in (
        ("li", "position against Li's boundary curve"),
        ("betas", "beta_- and beta_+"),
        ("locus", "hyperbola of vanishing tilt slope"),
        ("bound", "the inequality family 3b^2-K <= ac <= 3b^2"),
    ):
        subparsers.add_parser(name, help=help_text).add_argument("--v", required=True)

    oplus_parser = subparsers.add_parser("oplus", help="numerical exclusion of O_X^r[1] quotients")
    oplus_parser.add_argument("--r", type=int, required=True)

    twist_parser = subparsers.add_parser("twist", help="twisted character and display coordinates")
    twist_parser.add_argument("--v", required=True)
    twist_parser.add_argument("--beta", required=True)

    scan_parser = subparsers.add_parser("scan", help="enumerate candidate walls; see 'tiltwall scan -h'.")
    scan_kinds = scan_parser.add_subparsers(dest="scan_kind", required=True)
    vertical_parser = scan_kinds.add_parser("vertical", help="walls crossing the line beta = BETA")
    _add_scan_options(vertical_parser)
    vertical_parser.add_argument("--beta", required=True, help="rational 'a' or 'a/b'")
    _add_scan_options(scan_kinds.add_parser("left", help="walls left of the vertical wall"))

    ku_parser = subparsers.add_parser("ku", help="Kuznetsov component lattice")
    ku_parser.add_argument("action", choices=KU_ACTIONS)
    ku_parser.add_argument("--v", required=True, help="'a,b' for compose/serre/orbit, else a full character")
    ku_parser.add_argument("--shift", action="store_true", help="apply S[1] instead of S")

    verify_parser = subparsers.add_parser("verify", help="replay the golden fixture corpus")
    verify_parser.add_argument("--fixtures", type=Path, help="fixture directory (default: shipped corpus)")

    return parser.parse_args(_attach_literals(args))


class Printer:
    """writes text or JSON, coloured unless NO_COLOR is set or the stream is not a terminal"""

    def __init__(self, stream: TextIO, as_json: bool):
        self.stream = stream
        self.as_json = as_json
        self.color = not as_json and ENV_NO_COLOR not in os.environ and stream.isatty()
        if self.color:
            just_fix_windows_console()

    def paint(self, text: str, color: str) -> str:
        return f"{color}{text}{Style.RESET_ALL}" if self.color else text

    def emit(self, text: str | Callable[[], str], payload: Any) -> None:
        if self.as_json:
            self.stream.write(json.dumps(payload, indent=2) + "\n")
        else:
            self.stream.write((text() if callable(text) else text) + "\n")


def _scan_text(printer: Printer, report: ScanReport) -> str:
    lines = [f"target {report.target}: {report.query.description}"]
    lines.append(printer.paint(f"survivors ({len(report.survivors)}):", Fore.GREEN))
    lines += [f"  {pair.p} + {pair.q}  {pair.wall}" for pair in report.survivors]
    rejected = ", ".join(f"{name}: {count}" for name, count in report.counts.items() if name != "survivors")
    lines.append(f"rejected: {len(report.rejected)}" + (f" ({rejected})" if rejected else ""))
    if report.tangent:
        lines.append(printer.paint(f"tangent at alpha = 0 ({len(report.tangent)}):", Fore.YELLOW))
        lines += [f"  {pair.p} + {pair.q}  {pair.wall}" for pair in report.tangent]
    return "\n".join(lines)


def _verify_text(printer: Printer, summary: CorpusSummary) -> str:
    lines = []
    for result in summary.results:
        mark = printer.paint("PASS", Fore.GREEN) if result.passed else printer.paint("FAIL", Fore.RED)
        lines.append(f"{mark} {result.fixture.name}" + (f": {result.message}" if result.message else ""))
    lines.append(f"{len(summary.results) - len(summary.failed)}/{len(summary.results)} fixtures passed")
    return "\n".join(lines)


def _save_svg(path: Path | None, walls: list[tuple[str, WallLocus]], title: str) -> None:
    if path is None:
        return
    from tiltwall.plotting import save_walls_svg

    save_walls_svg(walls, path, title)


def _scan(args: argparse.Namespace, calculator: TiltWall, printer: Printer) -> int:
    disable: list[FilterName | str] = list(args.disable)
    if args.no_li:
        disable += [FilterName.LI_ON_P, FilterName.LI_ON_Q]
    if args.scan_kind == "vertical":
        report = calculator.scan_vertical(args.target, args.beta, args.rank_max, disable=disable)
    else:
        report = calculator.scan_left_of_vertical_wall(args.target, args.rank_max, disable=disable)
    walls = [(f"{pair.p} + {pair.q}", pair.wall) for pair in report.survivors]
    _save_svg(args.svg, walls, str(report.target))
    printer.emit(lambda: _scan_text(printer, report), report.to_json())
    return EXIT_OK


def _ku(args: argparse.Namespace, calculator: TiltWall, printer: Printer) -> int:
    match args.action:
        case "compose":
            character = calculator.ku_compose(args.v)
            printer.emit(str(character), character.to_json())
        case "decompose":
            k = calculator.ku_decompose(args.v)
            printer.emit(f"{k}  ({k.label})", k.to_json())
        case "serre":
            k = calculator.serre(args.v, args.shift)
            printer.emit(f"{k}  ({k.label})", k.to_json())
        case "orbit":
            orbit = calculator.orbit(args.v)
            printer.emit(" -> ".join(k.label for k in orbit), [k.to_json() for k in orbit])
        case "dim":
            dim = calculator.expected_dim(args.v)
            printer.emit(str(dim), dim)
        case "member":
            member = calculator.in_kuznetsov_component(args.v)
            printer.emit(str(member).lower(), member)
    return EXIT_OK


def _dispatch(args: argparse.Namespace, calculator: TiltWall, printer: Printer) -> int:
    match args.command:
        case "chi":
            chi = format_rational(calculator.chi(args.v, args.w))
            printer.emit(chi, chi)
        case "delta":
            value = format_rational(calculator.discriminant(args.v))
            printer.emit(value, value)
        case "wall":
            wall = calculator.wall(args.v, args.w)
            _save_svg(args.svg, [(f"W({args.v}, {args.w})", wall)], "")
            printer.emit(str(wall), wall.to_json())
        case "li":
            verdict = calculator.li(args.v)
            printer.emit(
                f"{verdict} (admissible={str(verdict.admissible).lower()})",
                {"kind": verdict.kind.value, "admissible": verdict.admissible},
            )
        case "betas":
            minus, plus = calculator.betas(args.v)
            betas = {"beta_minus": str(minus), "beta_plus": str(plus)}
            printer.emit(f"beta_- = {minus}\nbeta_+ = {plus}", betas)
        case "locus":
            mu, rhs = calculator.zero_slope_locus(args.v)
            printer.emit(
                f"(beta - {format_rational(mu)})^2 - alpha^2 = {format_rational(rhs)}",
                {"mu": format_rational(mu), "rhs": format_rational(rhs)},
            )
        case "bound":
            report = calculator.bound_report(args.v)
            printer.emit(str(report), report.to_json())
        case "oplus":
            excluded = calculator.oplus_excluded(args.r)
            printer.emit(str(excluded).lower(), excluded)
        case "twist":
            twisted = calculator.twist(args.v, args.beta)
            a, b, c = calculator.twisted_coordinates(args.v, args.beta)
            coordinates = [a, format_rational(b), format_rational(c)]
            printer.emit(
                f"{twisted}  (a, b, c) = ({a}, {format_rational(b)}, {format_rational(c)})",
                {"twisted": twisted.to_json(), "coordinates": coordinates},
            )
        case "scan":
            return _scan(args, calculator, printer)
        case "ku":
            return _ku(args, calculator, printer)
        case "verify":
            summary = verify(args.fixtures, calculator)
            printer.emit(lambda: _verify_text(printer, summary), summary.to_json())
            return EXIT_OK if summary.passed else EXIT_VERIFY_FAILED
    return EXIT_OK


def run(argv: list[str], stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    """
    Runs one command line.

    :param argv: arguments without the program name
    :param stdout: Optional. Output stream. Default: sys.stdout
    :param stderr: Optional. Error stream. Default: sys.stderr
    :return: exit code: 0 success, 1 verification failure, 2 usage error, 3 domain error
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    logging.basicConfig(level=args.log_level, stream=stderr, format="%(levelname)s %(name)s: %(message)s")
    printer = Printer(stdout, args.json)
    try:
        calculator = TiltWall(workers=args.workers)
        return _dispatch(args, calculator, printer)
    except DomainError as e:
        stderr.write(f"error: {type(e).__name__}: {e}\n")
        return EXIT_DOMAIN
    except TiltWallUserError as e:
        stderr.write(f"error: {type(e).__name__}: {e}\n")
        return EXIT_USAGE
    except TiltWallError as e:
        stderr.write(f"error: {type(e).__name__}: {e}\n")
        return EXIT_DOMAIN
    finally:
        stdout.flush()


def main() -> None:
    sys.exit(run(sys.argv[1:]))
