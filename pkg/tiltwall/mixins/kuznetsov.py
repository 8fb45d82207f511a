from tiltwall.kuznetsov import (
    expected_dim,
    from_chern,
    ku_numeric_membership,
    pairing_matrix,
    serre_apply,
    serre_matrix,
    serre_orbit,
    to_chern,
)
from tiltwall.mixins._protocol import MixinProtocol
from tiltwall.mixins._utils import full_character, ku_class
from tiltwall.models.characters import ChernCharacter
from tiltwall.models.kuznetsov import KuClass, SerreMatrix
from tiltwall.type_alias import IntMatrix


class KuznetsovMixin(MixinProtocol):
    def ku_compose(self, k: KuClass | str) -> ChernCharacter:
        """
        Chern character of a[I] + b[S(I)].

        Example::

            TiltWall().ku_compose("2,1")  # 4,-1,-5/6,1/6
        """
        return to_chern(ku_class(k))

    def ku_decompose(self, v: ChernCharacter | str) -> KuClass:
        """
        Coordinates of ``v`` in the basis ([I], [S(I)]).

        :raises NotInLattice: if ``v`` is not in the lattice
        """
        return from_chern(full_character(v))

    def in_kuznetsov_component(self, v: ChernCharacter | str) -> bool:
        """numerical membership: chi(O_X, v) = chi(O_X(H), v) = 0"""
        return ku_numeric_membership(full_character(v))

    def pairing_matrix(self) -> IntMatrix:
        return pairing_matrix()

    def serre_matrix(self) -> SerreMatrix:
        return serre_matrix()

    def serre(self, k: KuClass | str, shift: bool = False) -> KuClass:
        """
        Numerical Serre action; ``shift`` applies S[1], which negates the class.

        Example::

            TiltWall().serre("2,1")  # KuClass(a=-1, b=3)
        """
        return serre_apply(ku_class(k), shift)

    def orbit(self, k: KuClass | str) -> list[KuClass]:
        """the three nodes of the orbit diagram through ``k``"""
        return serre_orbit(ku_class(k))

    def expected_dim(self, v: ChernCharacter | KuClass | str) -> int:
        """
        Expected moduli dimension 1 - chi(v, v). Accepts a character or a Kuznetsov class.

        Example::

            TiltWall().expected_dim("4,-1,-5/6,1/6")  # 8
        """
        if isinstance(v, KuClass) or (isinstance(v, str) and v.count(",") == 1):
            return expected_dim(to_chern(ku_class(v)))
        return expected_dim(full_character(v))
