from fractions import Fraction

from tiltwall.enums import FilterName
from tiltwall.mixins._protocol import MixinProtocol
from tiltwall.mixins._utils import any_character, prepare_filters
from tiltwall.models.characters import Character
from tiltwall.models.scan import BoundReport, FilterSet, ScanBounds, ScanReport
from tiltwall.type_alias import RationalLike
from tiltwall.wallfinder import (
    derived_bound_report,
    oplus_exclusion,
    scan_region_left,
    scan_vertical,
    twisted_coordinates,
)


class ScanMixin(MixinProtocol):
    def scan_vertical(
        self,
        target: Character | str,
        beta: RationalLike,
        rank_max: int,
        filters: FilterSet | None = None,
        disable: list[FilterName | str] | None = None,
        ch2_numerators: tuple[int, int] | None = None,
    ) -> ScanReport:
        """
        Enumerates the decompositions target = p + q whose numerical wall crosses the line beta = ``beta``.

        :param target: the class, full or truncated; only ch0..ch2 matter
        :param beta: the vertical line
        :param rank_max: bound on |ch0| of both pieces
        :param filters: Optional. Filter switches. Default: everything on.
        :param disable: Optional. Filter names to switch off on top of ``filters``.
        :param ch2_numerators: Optional. Explicit inclusive range of 6*ch2 for the enumerated piece.
        :return: report with survivors, rejections and per-filter counts

        Example::

            report = TiltWall().scan_vertical("0,1,1/6", "1/6", rank_max=6)
            [(str(pair.p), str(pair.q), str(pair.wall)) for pair in report.survivors]
            # [("-1,0,0", "1,1,1/6", "circle center=1/6 radius_sq=1/36")]
        """
        return scan_vertical(
            any_character(target),
            beta,
            ScanBounds(rank_max, ch2_numerators),
            prepare_filters(filters, disable),
            workers=self.workers,
        )

    def scan_left_of_vertical_wall(
        self,
        target: Character | str,
        rank_max: int,
        filters: FilterSet | None = None,
        disable: list[FilterName | str] | None = None,
        ch2_numerators: tuple[int, int] | None = None,
    ) -> ScanReport:
        """
        Enumerates the semicircular walls of ``target`` left of its vertical wall.

        :param target: a class of positive rank and non-negative discriminant
        :param rank_max: bound on |ch0| of both pieces
        :param filters: Optional. Filter switches. Default: everything on.
        :param disable: Optional. Filter names to switch off on top of ``filters``.
        :param ch2_numerators: Optional. Explicit inclusive range of 6*ch2 for the enumerated piece.
        :return: report with survivors, rejections and per-filter counts

        Example::

            report = TiltWall().scan_left_of_vertical_wall("4,-1,-5/6", rank_max=10)
            [str(pair.wall) for pair in report.survivors]
            # ["circle center=-17/18 radius_sq=1/324", "circle center=-11/6 radius_sq=73/36"]
        """
        return scan_region_left(
            any_character(target),
            ScanBounds(rank_max, ch2_numerators),
            prepare_filters(filters, disable),
            workers=self.workers,
        )

    def bound_report(self, target: Character | str) -> BoundReport:
        """
        Example::

            str(TiltWall().bound_report("4,-1,-5/6"))  # "3b^2-23 <= ac <= 3b^2"
        """
        return derived_bound_report(any_character(target))

    def oplus_excluded(self, r: int) -> bool:
        """whether an O_X^r[1] quotient is numerically excluded on the wall W(5/6, 5/6)"""
        return oplus_exclusion(r)

    def twisted_coordinates(self, v: Character | str, beta: RationalLike) -> tuple[int, Fraction, Fraction]:
        return twisted_coordinates(any_character(v), beta)
