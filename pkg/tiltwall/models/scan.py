from dataclasses import dataclass, field, fields, replace
from fractions import Fraction

from tiltwall.enums import FilterName, ScanKind
from tiltwall.exactnum import format_rational, parse_rational
from tiltwall.exceptions import TiltWallUserError
from tiltwall.models.characters import TruncatedCharacter
from tiltwall.models.walls import WallLocus, wall_from_json
from tiltwall.type_alias import JsonDict


@dataclass(frozen=True)
class ScanBounds:
    """Enumeration box of a scan.

    :param rank_max: bound on |ch0| of both pieces of a decomposition
    :param ch2_numerators: optional inclusive range for 6*ch2 of the enumerated piece; by default the range
        follows from the discriminant bounds
    """

    rank_max: int
    ch2_numerators: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        if self.rank_max < 1:
            raise TiltWallUserError(f"rank_max must be at least 1, got {self.rank_max}.")
        if self.ch2_numerators is not None and self.ch2_numerators[0] > self.ch2_numerators[1]:
            raise TiltWallUserError(f"Empty ch2 numerator range {self.ch2_numerators}.")

    def to_json(self) -> JsonDict:
        data: JsonDict = {"rank_max": self.rank_max}
        if self.ch2_numerators is not None:
            data["ch2_numerators"] = list(self.ch2_numerators)
        return data

    @classmethod
    def from_json(cls, data: JsonDict) -> "ScanBounds":
        numerators = data.get("ch2_numerators")
        return cls(int(data["rank_max"]), tuple(numerators) if numerators else None)  # type: ignore[arg-type]


@dataclass(frozen=True)
class FilterSet:
    """switches for the scan filter pipeline; everything is on by default"""

    heart: bool = True
    parity: bool = True
    discriminant: bool = True
    partner_discriminant: bool = True
    discriminant_additivity: bool = True
    alpha_positive: bool = True
    region: bool = True
    rank_slope: bool = True
    li_on_p: bool = True
    li_on_q: bool = True

    @classmethod
    def without(cls, *names: FilterName | str) -> "FilterSet":
        """all filters except ``names``"""
        return cls().disable(*names)

    def disable(self, *names: FilterName | str) -> "FilterSet":
        try:
            switches = {FilterName(name).value: False for name in names}
        except ValueError as e:
            raise TiltWallUserError(
                f"Unknown filter. Use one of {[name.value for name in FilterName]}."
            ) from e
        return replace(self, **switches)

    def enabled(self, name: FilterName) -> bool:
        return bool(getattr(self, name.value))

    @property
    def disabled(self) -> list[FilterName]:
        return [name for name in FilterName if not self.enabled(name)]

    def to_json(self) -> JsonDict:
        return {item.name: getattr(self, item.name) for item in fields(self)}

    @classmethod
    def from_json(cls, data: JsonDict) -> "FilterSet":
        return cls(**{key: bool(value) for key, value in data.items()})


@dataclass(frozen=True)
class Verdict:
    passed: bool
    reason: str = ""

    def to_json(self) -> JsonDict:
        return {"passed": self.passed, "reason": self.reason}


@dataclass(frozen=True)
class CandidatePair:
    """An unordered decomposition target = p + q with its wall and filter verdicts.

    The pair is stored in canonical order: p is the lexicographically smaller piece.

    :param p: first piece
    :param q: second piece
    :param wall: numerical wall of the target against p
    :param alpha_sq_at_ref: alpha^2 where the wall meets the scan line (vertical scans) or the apex alpha^2
        (region scans); None when there is no such crossing
    :param verdicts: outcome of every evaluated filter
    :param tangent: the wall only touches the scan line, at alpha = 0
    """

    p: TruncatedCharacter
    q: TruncatedCharacter
    wall: WallLocus
    alpha_sq_at_ref: Fraction | None
    verdicts: dict[FilterName, Verdict] = field(default_factory=dict, hash=False)
    tangent: bool = False

    @property
    def target(self) -> TruncatedCharacter:
        return self.p + self.q

    @property
    def key(self) -> tuple[TruncatedCharacter, TruncatedCharacter]:
        return self.p, self.q

    @property
    def pieces(self) -> frozenset[TruncatedCharacter]:
        return frozenset((self.p, self.q))

    @property
    def first_failure(self) -> FilterName | None:
        failed = (name for name in FilterName if name in self.verdicts and not self.verdicts[name].passed)
        return next(failed, None)

    def to_json(self) -> JsonDict:
        return {
            "p": self.p.to_json(),
            "q": self.q.to_json(),
            "wall": self.wall.to_json(),
            "alpha_sq_at_ref": (
                None if self.alpha_sq_at_ref is None else format_rational(self.alpha_sq_at_ref)
            ),
            "tangent": self.tangent,
            "verdicts": {name.value: verdict.to_json() for name, verdict in self.verdicts.items()},
        }

    @classmethod
    def from_json(cls, data: JsonDict) -> "CandidatePair":
        alpha_sq = data.get("alpha_sq_at_ref")
        return cls(
            p=TruncatedCharacter.parse(data["p"]),
            q=TruncatedCharacter.parse(data["q"]),
            wall=wall_from_json(data["wall"]),
            alpha_sq_at_ref=None if alpha_sq is None else parse_rational(alpha_sq),
            verdicts={
                FilterName(name): Verdict(bool(verdict["passed"]), verdict.get("reason", ""))
                for name, verdict in data.get("verdicts", {}).items()
            },
            tangent=bool(data.get("tangent", False)),
        )


def canonical_pair(
    x: TruncatedCharacter, y: TruncatedCharacter
) -> tuple[TruncatedCharacter, TruncatedCharacter]:
    return (x, y) if x <= y else (y, x)


@dataclass(frozen=True)
class ScanQuery:
    kind: ScanKind
    target: TruncatedCharacter
    bounds: ScanBounds
    filters: FilterSet = FilterSet()
    beta0: Fraction | None = None

    @property
    def description(self) -> str:
        if self.kind is ScanKind.VERTICAL and self.beta0 is not None:
            return f"vertical line beta={format_rational(self.beta0)}"
        return "left of the vertical wall, heart at beta_-"

    def to_json(self) -> JsonDict:
        data: JsonDict = {
            "kind": self.kind.value,
            "target": self.target.to_json(),
            "bounds": self.bounds.to_json(),
            "filters": self.filters.to_json(),
        }
        if self.beta0 is not None:
            data["beta"] = format_rational(self.beta0)
        return data

    @classmethod
    def from_json(cls, data: JsonDict) -> "ScanQuery":
        return cls(
            kind=ScanKind(data["kind"]),
            target=TruncatedCharacter.parse(data["target"]),
            bounds=ScanBounds.from_json(data["bounds"]),
            filters=FilterSet.from_json(data.get("filters", {})),
            beta0=parse_rational(data["beta"]) if "beta" in data else None,
        )


@dataclass(frozen=True)
class Rejection:
    pair: CandidatePair
    filter: FilterName

    def to_json(self) -> JsonDict:
        return {**self.pair.to_json(), "filter": self.filter.value}

    @classmethod
    def from_json(cls, data: JsonDict) -> "Rejection":
        return cls(CandidatePair.from_json(data), FilterName(data["filter"]))


@dataclass(frozen=True)
class ScanReport:
    """Outcome of a scan: every enumerated pair is either a survivor or rejected by its first failing filter.

    :param query: the scan that produced the report
    :param survivors: pairs passing every enabled filter, sorted by canonical p
    :param rejected: the other pairs with their first failing filter, sorted by canonical p
    :param counts: number of rejections per filter name, plus ``survivors``
    :param tangent: pairs whose wall meets the scan line only at alpha = 0
    """

    query: ScanQuery
    survivors: list[CandidatePair]
    rejected: list[Rejection]
    counts: dict[str, int]
    tangent: list[CandidatePair] = field(default_factory=list)

    @property
    def target(self) -> TruncatedCharacter:
        return self.query.target

    @property
    def enumerated(self) -> int:
        return len(self.survivors) + len(self.rejected)

    def survivor_pieces(self) -> set[frozenset[TruncatedCharacter]]:
        return {pair.pieces for pair in self.survivors}

    def to_json(self) -> JsonDict:
        return {
            "query": self.query.to_json(),
            "description": self.query.description,
            "survivors": [pair.to_json() for pair in self.survivors],
            "rejected": [rejection.to_json() for rejection in self.rejected],
            "tangent": [pair.to_json() for pair in self.tangent],
            "counts": dict(self.counts),
        }

    @classmethod
    def from_json(cls, data: JsonDict) -> "ScanReport":
        return cls(
            query=ScanQuery.from_json(data["query"]),
            survivors=[CandidatePair.from_json(pair) for pair in data["survivors"]],
            rejected=[Rejection.from_json(rejection) for rejection in data["rejected"]],
            counts={key: int(value) for key, value in data["counts"].items()},
            tangent=[CandidatePair.from_json(pair) for pair in data.get("tangent", [])],
        )


@dataclass(frozen=True)
class BoundReport:
    """The inequality family 3b^2 - K <= ac <= 3b^2 with K = Delta_H(target)/3.

    :param target: the target class
    :param k: the constant K
    """

    target: TruncatedCharacter
    k: Fraction

    def __str__(self) -> str:
        return f"3b^2-{format_rational(self.k)} <= ac <= 3b^2"

    def to_json(self) -> JsonDict:
        return {"target": self.target.to_json(), "k": format_rational(self.k), "inequality": str(self)}
