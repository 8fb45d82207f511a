from dataclasses import dataclass
from fractions import Fraction
from typing import ClassVar

from tiltwall.enums import LiKind, WallKind
from tiltwall.exactnum import as_rational, format_rational, parse_rational
from tiltwall.exceptions import NonPositiveAlpha, TiltWallUserError
from tiltwall.type_alias import JsonDict


@dataclass(frozen=True)
class HalfPlanePoint:
    """A point (alpha, beta) of the upper half plane, recorded through alpha squared.

    :param alpha_sq: alpha^2, strictly positive
    :param beta: beta
    """

    alpha_sq: Fraction
    beta: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha_sq", as_rational(self.alpha_sq))
        object.__setattr__(self, "beta", as_rational(self.beta))
        if self.alpha_sq <= 0:
            raise NonPositiveAlpha(f"alpha^2 must be positive, got {self.alpha_sq}.")


@dataclass(frozen=True)
class Circle:
    """semicircular wall (beta - center)^2 + alpha^2 = radius_sq"""

    kind: ClassVar[WallKind] = WallKind.CIRCLE

    center: Fraction
    radius_sq: Fraction

    def __post_init__(self) -> None:
        if self.radius_sq <= 0:
            raise TiltWallUserError(f"A circle wall needs radius_sq > 0, got {self.radius_sq}.")

    def __str__(self) -> str:
        return f"circle center={format_rational(self.center)} radius_sq={format_rational(self.radius_sq)}"

    def to_json(self) -> JsonDict:
        return {
            "type": self.kind.value,
            "center": format_rational(self.center),
            "radius_sq": format_rational(self.radius_sq),
        }


@dataclass(frozen=True)
class VerticalLine:
    kind: ClassVar[WallKind] = WallKind.VERTICAL

    beta: Fraction

    def __str__(self) -> str:
        return f"vertical beta={format_rational(self.beta)}"

    def to_json(self) -> JsonDict:
        return {"type": self.kind.value, "beta": format_rational(self.beta)}


@dataclass(frozen=True)
class Everywhere:
    """proportional truncated classes: equal slopes on the whole half plane"""

    kind: ClassVar[WallKind] = WallKind.EVERYWHERE

    def __str__(self) -> str:
        return self.kind.value

    def to_json(self) -> JsonDict:
        return {"type": self.kind.value}


@dataclass(frozen=True)
class Empty:
    """No point of the half plane has equal slopes.

    A degenerate circle keeps its center and radius_sq <= 0; the fields are None when the slope equation
    has no beta dependence at all.
    """

    kind: ClassVar[WallKind] = WallKind.EMPTY

    center: Fraction | None = None
    radius_sq: Fraction | None = None

    def __str__(self) -> str:
        if self.center is None or self.radius_sq is None:
            return self.kind.value
        return f"empty center={format_rational(self.center)} radius_sq={format_rational(self.radius_sq)}"

    def to_json(self) -> JsonDict:
        data: JsonDict = {"type": self.kind.value}
        if self.center is not None and self.radius_sq is not None:
            data["center"] = format_rational(self.center)
            data["radius_sq"] = format_rational(self.radius_sq)
        return data


WallLocus = Circle | VerticalLine | Everywhere | Empty


def wall_from_json(data: JsonDict) -> WallLocus:
    """
    Inverse of ``to_json`` for every wall variant.

    :param data: e.g. ``{"type": "circle", "center": "-17/18", "radius_sq": "1/324"}``
    :return: the wall
    """
    try:
        kind = WallKind(data["type"])
        match kind:
            case WallKind.CIRCLE:
                return Circle(parse_rational(data["center"]), parse_rational(data["radius_sq"]))
            case WallKind.VERTICAL:
                return VerticalLine(parse_rational(data["beta"]))
            case WallKind.EVERYWHERE:
                return Everywhere()
            case WallKind.EMPTY:
                if "center" not in data:
                    return Empty()
                return Empty(parse_rational(data["center"]), parse_rational(data["radius_sq"]))
    except (KeyError, ValueError) as e:
        raise TiltWallUserError(f"Invalid wall {data}: {e}") from e


@dataclass(frozen=True)
class Outside:
    """the point (ch1/ch0, ch2/ch0) lies strictly below the boundary curve"""

    kind: ClassVar[LiKind] = LiKind.OUTSIDE

    @property
    def admissible(self) -> bool:
        return True

    def __str__(self) -> str:
        return self.kind.value


@dataclass(frozen=True)
class Boundary:
    """the point lies on the boundary curve; admissible only for |ch0| in {1, 2}"""

    kind: ClassVar[LiKind] = LiKind.BOUNDARY

    rank_ok: bool

    @property
    def admissible(self) -> bool:
        return self.rank_ok

    def __str__(self) -> str:
        return f"{self.kind.value} (rank_ok={str(self.rank_ok).lower()})"


@dataclass(frozen=True)
class Inside:
    kind: ClassVar[LiKind] = LiKind.INSIDE

    @property
    def admissible(self) -> bool:
        return False

    def __str__(self) -> str:
        return self.kind.value


LiVerdict = Outside | Boundary | Inside
