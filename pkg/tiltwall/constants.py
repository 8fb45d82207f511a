from fractions import Fraction

from tiltwall.models.characters import ChernCharacter, Variety
from tiltwall.models.kuznetsov import KuClass

# c(T_X) = (1+H)^5 / (1+3H) = 1 + 2H + 4H^2 - 2H^3, so td(X) = 1 + H + (2/3)H^2 + (1/3)H^3
CUBIC_THREEFOLD = Variety(h3=3, todd1=Fraction(1), todd2=Fraction(2, 3), todd3=Fraction(1, 3))

STRUCTURE_SHEAF = ChernCharacter(1, 0, 0, 0)
STRUCTURE_SHEAF_TWISTED = ChernCharacter(1, 1, Fraction(1, 2), Fraction(1, 6))
LINE_IDEAL = ChernCharacter(1, 0, Fraction(-1, 3), 0)
SERRE_LINE_IDEAL = ChernCharacter(2, -1, Fraction(-1, 6), Fraction(1, 6))
TAUTOLOGICAL_SUBBUNDLE = ChernCharacter(4, -1, Fraction(-1, 2), Fraction(-1, 6))
LINE_CLASS = ChernCharacter(0, 0, Fraction(1, 3), 0)
POINT_CLASS = ChernCharacter(0, 0, 0, Fraction(1, 3))

#: basis ([I], [S(I)]) of the numerical Grothendieck group of the Kuznetsov component
KU_BASIS = (LINE_IDEAL, SERRE_LINE_IDEAL)

#: degrees of the curves whose classes (d-2)[I] + [S(I)] are studied
CURVE_DEGREES = (4, 5, 6)

#: arrows (source, target, shifted) of the Serre orbit diagrams; ``shifted`` marks S[1]
SERRE_DIAGRAM_ARROWS: tuple[tuple[KuClass, KuClass, bool], ...] = (
    (KuClass(2, 1), KuClass(-1, 3), False),
    (KuClass(-1, 3), KuClass(3, -2), True),
    (KuClass(3, -2), KuClass(2, 1), False),
    (KuClass(3, 1), KuClass(-1, 4), False),
    (KuClass(-1, 4), KuClass(4, -3), True),
    (KuClass(4, -3), KuClass(3, 1), False),
)

# Li's bound: boundary points of rank outside this set are inadmissible
LI_BOUNDARY_RANKS = frozenset({1, 2})

# the wall W(5/6, 5/6) on which O_X^r[1] quotients are tested
OPLUS_WALL_CENTER = Fraction(5, 6)
OPLUS_DISCRIMINANT = Fraction(23, 3)

ENV_WORKERS = "TILTWALL_WORKERS"
ENV_LOG_LEVEL = "TILTWALL_LOG_LEVEL"
ENV_NO_COLOR = "NO_COLOR"
