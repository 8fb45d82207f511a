from enum import Enum


class Ordering(int, Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def of(cls, sign: int) -> "Ordering":
        return cls((sign > 0) - (sign < 0))


class WallKind(str, Enum):
    CIRCLE = "circle"
    VERTICAL = "vertical"
    EVERYWHERE = "everywhere"
    EMPTY = "empty"


class LiKind(str, Enum):
    OUTSIDE = "outside"
    BOUNDARY = "boundary"
    INSIDE = "inside"


class Crossing(str, Enum):
    """where a wall meets a vertical line without a single crossing point"""

    ON_LINE = "on-line"


class LatticeRule(str, Enum):
    CH1_INTEGRAL = "ch1 integral"
    CH2_INTEGRAL = "6*ch2 integral"
    PARITY = "parity"
    CH3_INTEGRAL = "6*ch3 integral"


class FilterName(str, Enum):
    """scan filters, in pipeline order"""

    HEART = "heart"
    PARITY = "parity"
    DISCRIMINANT = "discriminant"
    PARTNER_DISCRIMINANT = "partner_discriminant"
    DISCRIMINANT_ADDITIVITY = "discriminant_additivity"
    ALPHA_POSITIVE = "alpha_positive"
    REGION = "region"
    RANK_SLOPE = "rank_slope"
    LI_ON_P = "li_on_p"
    LI_ON_Q = "li_on_q"


class ScanKind(str, Enum):
    VERTICAL = "vertical"
    REGION_LEFT = "region_left"


class QueryType(str, Enum):
    CHI = "chi"
    DELTA = "delta"
    WALL = "wall"
    LOCUS = "locus"
    LI = "li"
    SLOPE_LIMIT = "slope_limit"
    SCAN_VERTICAL = "scan_vertical"
    SCAN_REGION = "scan_region"
    BOUND = "bound"
    OPLUS = "oplus"
    KU = "ku"
    ORBIT = "orbit"
    DIM = "dim"


class Provenance(str, Enum):
    PAPER = "paper"
    TRIVIAL = "trivial"
    DERIVED = "derived"
