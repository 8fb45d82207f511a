from dataclasses import dataclass

from tiltwall.parsers.literals import parse_integers
from tiltwall.type_alias import IntMatrix


@dataclass(frozen=True, order=True)
class KuClass:
    """The class a[I] + b[S(I)] in the numerical Grothendieck group of the Kuznetsov component,
    with I the ideal sheaf of a line and S the Serre functor.

    :param a: coefficient of [I]
    :param b: coefficient of [S(I)]
    """

    a: int
    b: int

    @classmethod
    def parse(cls, text: str) -> "KuClass":
        """parses the literal ``a,b``"""
        return cls(*parse_integers(text, 2))

    def __neg__(self) -> "KuClass":
        return KuClass(-self.a, -self.b)

    def __str__(self) -> str:
        return f"{self.a},{self.b}"

    @property
    def label(self) -> str:
        return f"{self.a}[I]{self.b:+d}[S(I)]"

    def to_json(self) -> list[int]:
        return [self.a, self.b]


@dataclass(frozen=True)
class SerreMatrix:
    """integer 2x2 matrix acting on KuClass column vectors in the basis ([I], [S(I)])"""

    rows: IntMatrix

    def apply(self, k: KuClass) -> KuClass:
        (m11, m12), (m21, m22) = self.rows
        return KuClass(m11 * k.a + m12 * k.b, m21 * k.a + m22 * k.b)
